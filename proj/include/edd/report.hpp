#pragma once

#include "edd/exactnum.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace edd {

enum class EddMethod { generic, segre, milnor, csm, euler, product, plane_curve, rational_curve };

/// "generic", "segre", ..., "plane-curve", "rational-curve".
std::string_view method_tag(EddMethod method);

/// A computed ED degree together with the named quantities it was assembled from.
struct EddReport {
    Integer value;
    EddMethod method = EddMethod::generic;
    std::map<std::string, Rational> intermediates;
    std::vector<std::string> warnings;
};

/// Converts an exact total into a report value. Non-integral totals are
/// rejected with DomainError; negative ones are kept and flagged in the
/// warnings, since they can only come from inputs that do not describe an
/// actual variety.
EddReport make_report(EddMethod method, const Rational& total, std::map<std::string, Rational> intermediates = {});

}  // namespace edd
