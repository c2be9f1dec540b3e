#include "edd/cli/command.hpp"

#include "edd/classcalc.hpp"
#include "edd/cli/polyexpr.hpp"
#include "edd/curves.hpp"
#include "edd/products.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

namespace edd::cli {

namespace {

struct SubcommandInfo {
    Subcommand id;
    const char* name;
    const char* description;
};

constexpr SubcommandInfo kSubcommands[] = {
    {Subcommand::plane_curve, "plane-curve", "smooth plane curve V(F): d(d-2) + R"},
    {Subcommand::rational_curve, "rational-curve", "rational curve (phi_1 : ... : phi_n): e + R - 2"},
    {Subcommand::rnc, "rnc", "rational normal curve of degree n-1 in P^(n-1)"},
    {Subcommand::segre, "segre", "Segre product P^(m_1-1) x ... x P^(m_p-1)"},
    {Subcommand::segre_veronese, "segre-veronese", "Segre-Veronese variety with weights w_i"},
    {Subcommand::snc, "snc", "product of projective spaces with normal crossing divisors"},
    {Subcommand::generic, "generic", "generic ED degree from Chern (or Chern-Mather) degrees"},
    {Subcommand::hypersurface, "hypersurface", "generic ED degree of a smooth degree-d hypersurface of P^(n-1)"},
    {Subcommand::from_segre, "from-segre", "ED degree from the Segre class of the singularity subscheme of Q ∩ X"},
    {Subcommand::from_milnor, "from-milnor", "ED degree from the Milnor class of Q ∩ X"},
    {Subcommand::from_csm, "from-csm", "ED degree from the CSM class of Q ∩ X"},
    {Subcommand::from_euler, "from-euler", "ED degree from Euler characteristics"},
    {Subcommand::sphere, "sphere", "sphere in P^(n-1) through every class path"},
    {Subcommand::surface_p3, "surface-p3", "smooth surface of degree d in P^3"},
    {Subcommand::curve, "curve", "smooth curve of degree d from #(Q ∩ C) and chi(C)"},
};

[[noreturn]] void usage(const std::string& message) { throw UsageError(message); }

const std::string& param(const CommandConfig& config, const std::string& key) {
    const auto it = config.params.find(key);
    if (it == config.params.end()) usage("missing --" + key);
    return it->second;
}

bool has(const CommandConfig& config, const std::string& key) { return config.params.count(key) > 0; }

std::vector<std::string> split(const std::string& text, char sep = ',') {
    std::vector<std::string> out;
    std::string piece;
    std::istringstream is(text);
    while (std::getline(is, piece, sep)) out.push_back(piece);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

long parse_long(const std::string& raw, const std::string& what) {
    const std::string text = trim(raw);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        usage("invalid integer '" + raw + "' for " + what);
    }
    return v;
}

unsigned parse_unsigned(const std::string& raw, const std::string& what) {
    const long v = parse_long(raw, what);
    if (v < 0 || v > 1000000) usage("value " + raw + " for " + what + " is out of range");
    return static_cast<unsigned>(v);
}

std::vector<unsigned> parse_unsigned_list(const std::string& raw, const std::string& what) {
    std::vector<unsigned> out;
    for (const auto& piece : split(raw)) out.push_back(parse_unsigned(piece, what));
    return out;
}

std::vector<long> parse_long_list(const std::string& raw, const std::string& what) {
    std::vector<long> out;
    for (const auto& piece : split(raw)) out.push_back(parse_long(piece, what));
    return out;
}

Integer parse_integer(const std::string& raw, const std::string& what) {
    try {
        return Integer::parse(trim(raw));
    } catch (const std::invalid_argument&) {
        usage("invalid integer '" + raw + "' for " + what);
    }
}

std::vector<Rational> parse_rationals(const std::string& raw, const std::string& what) {
    std::vector<Rational> out;
    for (const auto& piece : split(raw)) {
        try {
            out.push_back(Rational::parse(trim(piece)));
        } catch (const std::invalid_argument&) {
            usage("invalid rational '" + piece + "' for " + what);
        }
    }
    return out;
}

// Parses the class-valued options together so that all share one ambient P^N.
std::map<std::string, ProjClass> parse_classes(const CommandConfig& config, const std::vector<std::string>& keys) {
    std::map<std::string, std::vector<Rational>> raw;
    std::size_t longest = 1;
    for (const auto& key : keys) {
        if (!has(config, key)) continue;
        raw[key] = parse_rationals(param(config, key), "--" + key);
        longest = std::max(longest, raw[key].size());
    }
    unsigned ambient = static_cast<unsigned>(longest - 1);
    if (has(config, "ambient")) {
        ambient = parse_unsigned(param(config, "ambient"), "--ambient");
        if (ambient + 1U < longest) usage("--ambient is smaller than the longest degree list");
    }
    std::map<std::string, ProjClass> out;
    for (auto& [key, values] : raw) out.emplace(key, ProjClass(ambient, std::move(values)));
    return out;
}

unsigned parse_dim(const CommandConfig& config, const ProjClass& chern) {
    const unsigned dim = parse_unsigned(param(config, "dim"), "--dim");
    if (dim > chern.ambient_dim()) usage("--dim exceeds the ambient dimension of the degree lists");
    return dim;
}

std::vector<unsigned> product_weights(const CommandConfig& config, std::size_t p) {
    if (!has(config, "weights")) return std::vector<unsigned>(p, 1);
    auto w = parse_unsigned_list(param(config, "weights"), "--weights");
    if (w.size() != p) usage("--weights must have one entry per factor");
    return w;
}

CommandResult run_products(const CommandConfig& config) {
    const auto dims = parse_unsigned_list(param(config, "dims"), "--dims");
    ProductSpec spec{dims, product_weights(config, dims.size()),
                     config.coords == "invariant" ? CoordinateChoice::invariant : CoordinateChoice::general};
    if (config.command == Subcommand::segre && has(config, "weights")) usage("segre takes no --weights");
    try {
        validate(spec);
    } catch (const DomainError& e) {
        usage(e.what());
    }

    const std::string method = config.method.empty() ? "segre" : config.method;
    const bool unit_weights = std::all_of(spec.weights.begin(), spec.weights.end(), [](unsigned w) { return w == 1; });
    if (method != "segre" && spec.coords == CoordinateChoice::general && !unit_weights) {
        usage("the Friedland-Ottaviani formula gives the invariant-coordinate value; use --coords invariant");
    }

    std::map<std::string, Rational> intermediates;
    std::optional<Integer> value;
    if (method == "segre" || method == "both") {
        const Integer v = edd_segre_veronese(spec);
        intermediates["segre_formula"] = v;
        value = v;
    }
    if (method == "fo" || method == "both") {
        const Integer v = edd_fo(spec.dims, spec.weights);
        intermediates["fo_formula"] = v;
        if (value && *value != v) {
            throw std::logic_error("the two product formulas disagree: " + value->to_string() + " vs " + v.to_string());
        }
        value = v;
    }
    return {make_report(EddMethod::product, *value, std::move(intermediates)), {}};
}

CommandResult run_snc(const CommandConfig& config) {
    const auto dims = parse_unsigned_list(param(config, "dims"), "--dims");
    const auto weights = product_weights(config, dims.size());
    std::vector<std::vector<long>> divisors;
    for (const auto& d : config.divisors) {
        divisors.push_back(parse_long_list(d, "--divisor"));
        if (divisors.back().size() != dims.size()) usage("every --divisor needs one entry per factor");
    }
    try {
        validate({dims, weights, CoordinateChoice::general});
    } catch (const DomainError& e) {
        usage(e.what());
    }
    const Integer v = snc_edd(dims, weights, divisors);
    return {make_report(EddMethod::product, v, {{"divisors", static_cast<long>(divisors.size())}}), {}};
}

CommandResult run_plane_curve(const CommandConfig& config) {
    const TernaryForm f = to_ternary(parse_poly(param(config, "poly")));
    PlaneCurveInput input{f, config.assume_smooth, config.smoothness_bound};
    CommandResult result{plane_curve_edd(input), {}};
    if (config.verbose) result.details["pullback"] = isotropic_pullback(f).to_string();
    return result;
}

CommandResult run_rational_curve(const CommandConfig& config) {
    RationalCurveInput input;
    for (const auto& piece : split(param(config, "phi"))) input.phi.push_back(to_binary(parse_poly(piece)));
    if (has(config, "weights")) {
        input.square_weights.emplace();
        for (const auto& piece : split(param(config, "weights"))) {
            input.square_weights->push_back(to_constant(parse_poly(piece)));
        }
        if (input.square_weights->size() != input.phi.size()) usage("--weights must have one entry per coordinate");
    }
    // All forms must share a degree; a zero coordinate parses as degree 0.
    unsigned e = 0;
    for (const auto& p : input.phi) {
        if (!p.is_zero()) e = std::max(e, p.degree());
    }
    for (auto& p : input.phi) {
        if (p.is_zero()) p = BinaryForm::zero(e);
    }
    CommandResult result{rational_curve_edd(input), {}};
    if (config.verbose) {
        BinaryForm sum = BinaryForm::zero(2 * e);
        for (std::size_t j = 0; j < input.phi.size(); ++j) {
            const GaussianRational w = input.square_weights ? (*input.square_weights)[j] : GaussianRational(1);
            sum = sum + (input.phi[j] * input.phi[j]).scaled(w);
        }
        result.details["sum_of_squares"] = sum.to_string();
    }
    return result;
}

CommandResult run_sphere(const CommandConfig& config) {
    const unsigned n = parse_unsigned(param(config, "n"), "--n");
    if (n < 2) usage("--n must be at least 2");
    const SphereData data = sphere_data(n);
    const std::string method = config.method.empty() ? "all" : config.method;

    std::map<std::string, Rational> values;
    std::optional<EddReport> chosen;
    auto record = [&](const std::string& name, EddReport report) {
        values[name] = report.value;
        if (!chosen || method == name) chosen = std::move(report);
    };
    if (method == "segre" || method == "all") record("segre", edd_smooth_via_segre(data.chern, data.dim_x, data.segre));
    if (method == "milnor" || method == "all") record("milnor", edd_from_milnor(data.chern, data.dim_x, data.milnor));
    if (method == "csm" || method == "all") record("csm", edd_from_csm(data.chern, data.dim_x, data.csm));
    if (method == "euler" || method == "all") record("euler", edd_from_euler(data.euler));
    for (const auto& [name, v] : values) {
        if (v != values.begin()->second) throw std::logic_error("sphere paths disagree at path " + name);
    }
    CommandResult result{*chosen, {}};
    for (const auto& [name, v] : values) result.report.intermediates[name + "_path"] = v;
    if (config.verbose) {
        result.details["chern"] = data.chern.to_string();
        result.details["segre"] = data.segre.to_string();
        result.details["milnor"] = data.milnor.to_string();
        result.details["csm"] = data.csm.to_string();
    }
    return result;
}

}  // namespace

CommandConfig parse_command_line(const std::vector<std::string>& args) {
    CLI::App app{"Euclidean distance degrees of projective varieties", "edd"};
    app.require_subcommand(1);
    app.fallthrough();

    CommandConfig config;
    std::map<std::string, std::string> store;
    std::vector<std::pair<CLI::App*, Subcommand>> subs;
    std::vector<std::pair<std::string, CLI::Option*>> options;

    app.add_flag("--json", config.json, "print the report as JSON");
    app.add_flag("--verbose", config.verbose, "print intermediate values");

    auto option = [&](CLI::App* sub, const std::string& name, const std::string& help, bool required = true) {
        CLI::Option* opt = sub->add_option("--" + name, store[sub->get_name() + "/" + name], help);
        if (required) opt->required();
        options.emplace_back(sub->get_name() + "/" + name, opt);
        return opt;
    };
    const std::vector<std::string> product_methods = {"segre", "fo", "both"};

    for (const auto& info : kSubcommands) {
        CLI::App* sub = app.add_subcommand(info.name, info.description);
        subs.emplace_back(sub, info.id);
        switch (info.id) {
            case Subcommand::plane_curve:
                option(sub, "poly", "ternary form F(x,y,z), e.g. x^5+y^5+z^5");
                sub->add_flag("--assume-smooth", config.assume_smooth, "skip the smoothness check");
                break;
            case Subcommand::rational_curve:
                option(sub, "phi", "comma-separated binary forms in s,t of one degree");
                option(sub, "weights", "w_j: coordinate j is sqrt(w_j)*phi_j", false);
                break;
            case Subcommand::rnc: option(sub, "n", "ambient P^(n-1)"); break;
            case Subcommand::segre:
                option(sub, "dims", "m_1,...,m_p");
                sub->add_option("--method", config.method, "segre, fo or both")->check(CLI::IsMember(product_methods));
                break;
            case Subcommand::segre_veronese:
                option(sub, "dims", "m_1,...,m_p");
                option(sub, "weights", "w_1,...,w_p");
                sub->add_option("--method", config.method, "segre, fo or both")->check(CLI::IsMember(product_methods));
                sub->add_option("--coords", config.coords, "general or invariant")
                    ->check(CLI::IsMember({"general", "invariant"}));
                break;
            case Subcommand::snc:
                option(sub, "dims", "m_1,...,m_p");
                option(sub, "weights", "w_1,...,w_p (default all 1)", false);
                sub->add_option("--divisor", config.divisors, "multidegree d_1,...,d_p of a divisor (repeatable)");
                break;
            case Subcommand::generic:
                option(sub, "chern", "degrees of c(TX) ∩ [X], dimension 0 first");
                option(sub, "dim", "dim X");
                option(sub, "ambient", "N for classes in P^N", false);
                sub->add_flag("--mather", config.mather, "the degrees are Chern-Mather degrees");
                break;
            case Subcommand::hypersurface:
                option(sub, "n", "ambient P^(n-1)");
                option(sub, "d", "degree");
                break;
            case Subcommand::from_segre:
                option(sub, "chern", "degrees of c(TX) ∩ [X]");
                option(sub, "dim", "dim X");
                option(sub, "segre", "degrees of s(J(Q ∩ X), X)");
                option(sub, "ambient", "N for classes in P^N", false);
                break;
            case Subcommand::from_milnor: {
                option(sub, "chern", "degrees of c(TX) ∩ [X]");
                option(sub, "dim", "dim X");
                CLI::Option* milnor = option(sub, "milnor", "degrees of M(Q ∩ X)", false);
                CLI::Option* segre = option(sub, "segre", "derive M(Q ∩ X) from s(J(Q ∩ X), X)", false);
                milnor->excludes(segre);
                segre->excludes(milnor);
                option(sub, "ambient", "N for classes in P^N", false);
                break;
            }
            case Subcommand::from_csm:
                option(sub, "chern", "degrees of c(X)");
                option(sub, "dim", "dim X");
                option(sub, "csm", "degrees of c_SM(Q ∩ X)");
                option(sub, "ambient", "N for classes in P^N", false);
                break;
            case Subcommand::from_euler:
                option(sub, "dim", "dim X");
                option(sub, "chi", "chi(X),chi(X∩Q),chi(X∩H),chi(X∩Q∩H)");
                break;
            case Subcommand::sphere:
                option(sub, "n", "ambient P^(n-1)");
                sub->add_option("--method", config.method, "segre, milnor, csm, euler or all")
                    ->check(CLI::IsMember({"segre", "milnor", "csm", "euler", "all"}));
                break;
            case Subcommand::surface_p3:
                option(sub, "d", "degree");
                option(sub, "chi", "chi(S ∩ Q)");
                break;
            case Subcommand::curve:
                option(sub, "d", "degree");
                option(sub, "num-qc", "#(Q ∩ C)");
                option(sub, "chi", "chi(C)");
                break;
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        std::ostringstream out;
        std::ostringstream err;
        app.exit(e, out, err);
        throw HelpRequested{out.str()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    for (const auto& [sub, id] : subs) {
        if (!sub->parsed()) continue;
        config.command = id;
        const std::string prefix = sub->get_name() + "/";
        for (const auto& [key, opt] : options) {
            if (key.rfind(prefix, 0) == 0 && opt->count() > 0) config.params[key.substr(prefix.size())] = store[key];
        }
        if (!config.method.empty() && id != Subcommand::segre && id != Subcommand::segre_veronese &&
            id != Subcommand::sphere) {
            throw UsageError("--method is not valid here");
        }
    }

    if (const char* bound = std::getenv("EDD_SMOOTHNESS_BOUND")) {
        config.smoothness_bound = parse_unsigned(bound, "EDD_SMOOTHNESS_BOUND");
    }
    return config;
}

CommandResult run_command(const CommandConfig& config) {
    switch (config.command) {
        case Subcommand::plane_curve: return run_plane_curve(config);
        case Subcommand::rational_curve: return run_rational_curve(config);
        case Subcommand::rnc: {
            const unsigned n = parse_unsigned(param(config, "n"), "--n");
            if (n < 2) usage("--n must be at least 2");
            return {rational_curve_edd(rational_normal_curve(n)), {}};
        }
        case Subcommand::segre:
        case Subcommand::segre_veronese: return run_products(config);
        case Subcommand::snc: return run_snc(config);
        case Subcommand::generic: {
            const auto classes = parse_classes(config, {"chern"});
            const ProjClass& chern = classes.at("chern");
            const unsigned dim = parse_dim(config, chern);
            const Rational g = gedd_value(chern, dim);
            EddReport report = make_report(EddMethod::generic, g, {{"gEdd", g}});
            if (config.mather) report.warnings.emplace_back("Chern-Mather input: the value is the generic ED degree of a possibly singular X");
            return {report, {}};
        }
        case Subcommand::hypersurface: {
            const unsigned n = parse_unsigned(param(config, "n"), "--n");
            const unsigned d = parse_unsigned(param(config, "d"), "--d");
            if (n < 2 || d < 1) usage("hypersurface needs --n >= 2 and --d >= 1");
            const ProjClass chern = hypersurface_chern(n, d);
            const Rational g = gedd_value(chern, n - 2);
            CommandResult result{make_report(EddMethod::generic, g, {{"gEdd", g}}), {}};
            if (config.verbose) result.details["chern"] = chern.to_string();
            return result;
        }
        case Subcommand::from_segre: {
            const auto classes = parse_classes(config, {"chern", "segre"});
            const ProjClass& chern = classes.at("chern");
            return {edd_smooth_via_segre(chern, parse_dim(config, chern), classes.at("segre")), {}};
        }
        case Subcommand::from_milnor: {
            const auto classes = parse_classes(config, {"chern", "milnor", "segre"});
            const ProjClass& chern = classes.at("chern");
            const unsigned dim = parse_dim(config, chern);
            if (classes.count("milnor")) return {edd_from_milnor(chern, dim, classes.at("milnor")), {}};
            if (!classes.count("segre")) usage("from-milnor needs --milnor or --segre");
            const ProjClass milnor = milnor_from_segre(chern, dim, classes.at("segre"));
            CommandResult result{edd_from_milnor(chern, dim, milnor), {}};
            if (config.verbose) result.details["milnor"] = milnor.to_string();
            return result;
        }
        case Subcommand::from_csm: {
            const auto classes = parse_classes(config, {"chern", "csm"});
            const ProjClass& chern = classes.at("chern");
            return {edd_from_csm(chern, parse_dim(config, chern), classes.at("csm")), {}};
        }
        case Subcommand::from_euler: {
            const auto chi = split(param(config, "chi"));
            if (chi.size() != 4) usage("--chi needs four integers");
            EulerData data{parse_unsigned(param(config, "dim"), "--dim"), parse_integer(chi[0], "--chi"),
                           parse_integer(chi[1], "--chi"), parse_integer(chi[2], "--chi"), parse_integer(chi[3], "--chi")};
            return {edd_from_euler(data), {}};
        }
        case Subcommand::sphere: return run_sphere(config);
        case Subcommand::surface_p3:
            return {surface_p3_edd(parse_unsigned(param(config, "d"), "--d"), parse_integer(param(config, "chi"), "--chi")),
                    {}};
        case Subcommand::curve:
            return {curve_edd(parse_unsigned(param(config, "d"), "--d"), parse_unsigned(param(config, "num-qc"), "--num-qc"),
                              parse_integer(param(config, "chi"), "--chi")),
                    {}};
    }
    throw std::logic_error("unhandled subcommand");
}

std::string to_json(const CommandConfig& config, const CommandResult& result) {
    nlohmann::json doc;
    doc["edd"] = result.report.value.to_string();
    doc["method"] = std::string(method_tag(result.report.method));
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto& [k, v] : config.params) inputs[k] = v;
    if (!config.divisors.empty()) inputs["divisor"] = config.divisors;
    if (!config.method.empty()) inputs["method"] = config.method;
    if (config.command == Subcommand::segre_veronese) inputs["coords"] = config.coords;
    if (config.assume_smooth) inputs["assume_smooth"] = "true";
    if (config.mather) inputs["mather"] = "true";
    doc["inputs"] = inputs;
    nlohmann::json intermediates = nlohmann::json::object();
    for (const auto& [k, v] : result.report.intermediates) intermediates[k] = v.to_string();
    for (const auto& [k, v] : result.details) intermediates[k] = v;
    doc["intermediates"] = intermediates;
    doc["warnings"] = result.report.warnings;
    return doc.dump();
}

std::string to_text(const CommandConfig& config, const CommandResult& result) {
    std::ostringstream os;
    os << "ED degree: " << result.report.value << "\n";
    os << "method: " << method_tag(result.report.method) << "\n";
    if (config.verbose) {
        for (const auto& [k, v] : result.report.intermediates) os << "  " << k << " = " << v << "\n";
        for (const auto& [k, v] : result.details) os << "  " << k << " = " << v << "\n";
    }
    for (const auto& w : result.report.warnings) os << "warning: " << w << "\n";
    return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto fail = [&err](const char* kind, const std::string& message, int code) {
        nlohmann::json doc{{"error", kind}, {"message", message}, {"exit_code", code}};
        err << doc.dump() << "\n";
        return code;
    };
    try {
        const CommandConfig config = parse_command_line(args);
        const CommandResult result = run_command(config);
        out << (config.json ? to_json(config, result) + "\n" : to_text(config, result));
        return 0;
    } catch (const HelpRequested& help) {
        out << help.text;
        return 0;
    } catch (const DomainError& e) {
        return fail("domain", e.what(), 3);
    } catch (const UnsupportedError& e) {
        return fail("unsupported", e.what(), 4);
    } catch (const std::invalid_argument& e) {
        return fail("usage", e.what(), 2);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 1);
    }
}

}  // namespace edd::cli
