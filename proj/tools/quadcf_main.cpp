// quadcf — exact verification suites for relatively quadratic units:
// Hurwitz continued fractions, ascending series, and Newton iteration over
// the Gaussian and Eisenstein lattices.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <string>

#include "quadcf/quadcf.hpp"

namespace {

using namespace quadcf;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCertFail = 3;

constexpr unsigned long long kDefaultSeed = 0x5eed5eedULL;

struct Usage : std::runtime_error {
    explicit Usage(const std::string& m) : std::runtime_error(m) {}
};

LatticeKind parse_kind(const std::string& s) {
    if (s == "G" || s == "g" || s == "gaussian") return LatticeKind::Gaussian;
    if (s == "E" || s == "e" || s == "eisenstein") return LatticeKind::Eisenstein;
    throw Usage("unknown kind '" + s + "' (expected G or E)");
}

ExclusionLevel parse_level(const std::string& s) {
    if (s == "L1" || s == "1") return ExclusionLevel::L1;
    if (s == "L2" || s == "2") return ExclusionLevel::L2;
    if (s == "L3" || s == "3") return ExclusionLevel::L3;
    throw Usage("unknown level '" + s + "' (expected L1, L2 or L3)");
}

// Lattice literals: Gaussian "a+bi" (3, -2i, 1+i, 2-2i); Eisenstein either
// coordinates "x,y" or "a+cw" with w = (1+sqrt(-3))/2.
LatticePoint parse_lattice(const std::string& raw, LatticeKind kind) {
    std::string s;
    for (char c : raw)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Usage("empty lattice literal");

    if (kind == LatticeKind::Eisenstein && s.find(',') != std::string::npos) {
        auto comma = s.find(',');
        auto x = parse_integer(s.substr(0, comma));
        auto y = parse_integer(s.substr(comma + 1));
        if (!x || !y) throw Usage("bad coordinate pair '" + raw + "'");
        return {kind, *x, *y};
    }

    const char sym = kind == LatticeKind::Gaussian ? 'i' : 'w';
    static const std::regex re(R"(^([+-]?\d+)?(?:([+-]?\d*)([iw]))?$)");
    std::smatch m;
    if (!std::regex_match(s, m, re) || (m[1].str().empty() && m[3].str().empty()))
        throw Usage("bad lattice literal '" + raw + "'");
    if (m[3].matched && m[3].str()[0] != sym)
        throw Usage("literal '" + raw + "' uses the wrong imaginary symbol for kind " +
                    kind_tag(kind));

    Integer a = m[1].str().empty() ? Integer(0) : *parse_integer(m[1].str());
    Integer c = 0;
    if (m[3].matched) {
        std::string cs = m[2].str();
        if (cs.empty() || cs == "+") c = 1;
        else if (cs == "-") c = -1;
        else c = *parse_integer(cs);
    }
    if (kind == LatticeKind::Gaussian) return {kind, a, c};
    // a + c*w in basis coordinates: (a + c, a)
    return {kind, a + c, a};
}

UnitValue parse_unit(const std::string& raw, LatticeKind kind) {
    LatticePoint p = parse_lattice(raw, kind);
    if (p.norm() != 1) throw Usage("'" + raw + "' is not a unit of R_" + kind_tag(kind));
    return UnitValue{p};
}

struct Output {
    std::string format = "text";
    std::unique_ptr<std::ofstream> file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file = std::make_unique<std::ofstream>(path);
        if (!*file) throw Usage("cannot open output file " + path);
        os = file.get();
    }
    std::ostream& out() { return *os; }
};

struct CommonOpts {
    std::string kind_str = "G";
    std::string format = "text";
    std::string out_path;
    unsigned prec_init = 64;
    unsigned prec_max = 0;  // 0 -> env or default
    unsigned long long seed = kDefaultSeed;

    PrecisionPolicy policy() const {
        unsigned max = prec_max;
        if (max == 0) {
            if (const char* env = std::getenv("QUADCF_PREC_MAX")) {
                max = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
                if (max == 0) throw Usage("bad QUADCF_PREC_MAX value");
            } else {
                max = 65536;
            }
        }
        return PrecisionPolicy{prec_init, max};
    }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_kind = true) {
    if (with_kind) cmd->add_option("--kind", o.kind_str, "lattice kind: G or E");
    cmd->add_option("--format", o.format, "output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", o.out_path, "write output to file");
    cmd->add_option("--prec-init", o.prec_init, "initial working precision (bits)");
    cmd->add_option("--prec-max", o.prec_max, "precision ceiling (bits)");
    cmd->add_option("--seed", o.seed, "seed for randomized property suites");
}

// ---------------------------------------------------------------- expand --

int cmd_expand(const CommonOpts& o, const std::string& t_str, const std::string& u_str,
               unsigned count, const std::string& root_str) {
    LatticeKind kind = parse_kind(o.kind_str);
    LatticePoint t = parse_lattice(t_str, kind);
    UnitValue u = parse_unit(u_str, kind);
    QuadParams params = QuadParams::admissible_l2(t, u);  // DomainError -> usage
    RootChoice root = root_str == "beta" ? RootChoice::Beta : RootChoice::Alpha;

    PrecisionPolicy policy = o.policy();
    QuadExtElement z = root == RootChoice::Alpha ? QuadExtElement::alpha(params)
                                                 : QuadExtElement::beta(params);
    CFWord expanded = hurwitz_expand(z, count, policy);
    CFWord predicted = predicted_expansion(params, root, count);
    bool match = expanded == predicted;
    std::optional<PeriodicityReport> period;
    if (expanded.length() + 1 >= 4) period = detect_periodicity(expanded);

    Output output;
    output.format = o.format;
    output.open(o.out_path);
    if (o.format == "json") {
        json j{{"params", {{"t", to_json(t)}, {"u", to_json(u.value())}}},
               {"root", root == RootChoice::Alpha ? "alpha" : "beta"},
               {"expanded", to_json(expanded)},
               {"predicted", to_json(predicted)},
               {"match", match}};
        j["periodicity"] = period ? to_json(*period) : json(nullptr);
        output.out() << j.dump(2) << "\n";
    } else {
        output.out() << "params: " << params.str() << " over R_" << kind_tag(kind) << "\n";
        output.out() << "expanded : " << expanded.str() << "\n";
        output.out() << "predicted: " << predicted.str() << "\n";
        output.out() << "match=" << (match ? "true" : "false");
        if (period)
            output.out() << ", preperiod=" << period->preperiod_length
                         << ", period=" << period->period_length;
        output.out() << "\n";
    }
    return match ? kExitOk : kExitVerifyFail;
}

// -------------------------------------------------------- verify-symbolic --

int cmd_verify_symbolic(const CommonOpts& o, unsigned n_max) {
    SymbolicConfig cfg;
    if (n_max + 1 > cfg.cap)
        throw Usage("CapExceeded: -n " + std::to_string(n_max) + " needs " +
                    std::to_string(n_max + 1) + " Newton compositions; cap is " +
                    std::to_string(cfg.cap));

    Output output;
    output.format = o.format;
    output.open(o.out_path);
    bool all_ok = true;
    json rows = json::array();
    auto emit = [&](const std::string& name, bool ok, const json& extra = {}) {
        all_ok = all_ok && ok;
        if (o.format == "json") {
            json j{{"check", name}, {"pass", ok}};
            if (!extra.is_null() && !extra.empty()) j["detail"] = extra;
            rows.push_back(j);
        } else {
            output.out() << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        }
    };

    output.out() << "# verify-symbolic n_max=" << n_max << " seed=" << o.seed << "\n";
    for (unsigned n = 0; n <= n_max; ++n) {
        Theorem1Report r = verify_theorem1(n, cfg);
        emit("theorem1 n=" + std::to_string(n), r.all(), to_json(r));
    }
    unsigned aux_max = std::min(n_max + 1, cfg.cap - 1);
    for (unsigned n = 0; n <= aux_max; ++n) {
        emit("telescoping-at-0 n=" + std::to_string(n), check_telescoping_at_zero(n, cfg));
        emit("telescoping-at-T n=" + std::to_string(n), check_telescoping_at_t(n, cfg));
        emit("h-ratio n=" + std::to_string(n), check_h_ratio(n, cfg));
    }
    PQRS seq = pqrs_sequences(64);
    emit("pqrs-identity-a to 31", check_pqrs_a(seq, 31));
    emit("pqrs-identity-b to 31", check_pqrs_b(seq, 31));
    emit("determinant to 31", check_determinant(seq.pq, 31) && check_determinant(seq.rs, 31));
    emit("reversal to 31", check_reversal(31));
    std::mt19937_64 rng(o.seed);
    emit("scaling (30 random words)", check_scaling(30, 7, rng));
    for (unsigned n = 0; n <= cfg.cap - 1; ++n)
        emit("newton-squaring n=" + std::to_string(n), check_newton_squaring(seq, n));

    if (o.format == "json") output.out() << rows.dump(2) << "\n";
    else output.out() << (all_ok ? "all symbolic checks passed" : "SYMBOLIC FAILURES") << "\n";
    return all_ok ? kExitOk : kExitVerifyFail;
}

// ------------------------------------------------------------ verify-grid --

struct GridRow {
    std::string unit, t;
    bool roots_located = false;
    bool expansion_match = false;
    bool chain_exact = false;
    bool periodicity_ok = false;
    bool bound_ok = true;  // only meaningful at L3
    std::string error;

    bool pass() const {
        return error.empty() && roots_located && expansion_match && chain_exact &&
               periodicity_ok && bound_ok;
    }
};

bool roots_located_certified(const QuadParams& p, const PrecisionPolicy& policy) {
    for (unsigned bits = policy.initial_bits;; bits *= 2) {
        auto [alpha, beta] = roots_numeric(p, bits);
        Ball beta_off = beta - embed_numeric(p.t(), bits);
        if (alpha.abs_upper(bits) < make_rational(1, 2) &&
            beta_off.abs_upper(bits) < make_rational(1, 2))
            return true;
        if (bits >= policy.max_bits) return false;
    }
}

GridRow run_grid_case(const QuadParams& p, ExclusionLevel level, unsigned n_max,
                      const PrecisionPolicy& policy) {
    GridRow row;
    row.unit = p.u().value().str();
    row.t = p.t().str();
    try {
        row.roots_located = roots_located_certified(p, policy);

        const unsigned terms = (1u << (std::min(n_max, 4u) + 1)) - 1;
        CFWord expanded = hurwitz_expand(QuadExtElement::alpha(p), terms, policy);
        CFWord predicted = predicted_expansion(p, RootChoice::Alpha, terms);
        CFWord expanded_b = hurwitz_expand(QuadExtElement::beta(p), terms, policy);
        CFWord predicted_b = predicted_expansion(p, RootChoice::Beta, terms);
        row.expansion_match = expanded == predicted && expanded_b == predicted_b &&
                              expanded.partials_legal() && expanded_b.partials_legal();

        auto rep = detect_periodicity(expanded);
        auto rep_b = detect_periodicity(expanded_b);
        row.periodicity_ok = rep && rep->preperiod_length <= 1 && rep->period_length <= 2 &&
                             rep_b && rep_b->preperiod_length <= 1 && rep_b->period_length <= 2;

        NewtonTrace at0 = newton_trace(p, NewtonStartConcrete::AtZero, n_max + 1);
        NewtonTrace att = newton_trace(p, NewtonStartConcrete::AtT, n_max + 1);
        FieldElement t = FieldElement::from_lattice(p.t());
        row.chain_exact = true;
        for (unsigned n = 0; n <= n_max; ++n) {
            FieldElement s = sierpinski_value(p, n);
            unsigned len = (1u << (n + 1)) - 1;
            CFWord wa = predicted_expansion(p, RootChoice::Alpha, len);
            CFWord wb = predicted_expansion(p, RootChoice::Beta, len);
            bool ok = at0.iterates[n + 1] == s && eval_cf(wa) == s &&
                      att.iterates[n + 1] == t - s && eval_cf(wb) == t - s;
            if (!ok) {
                row.chain_exact = false;
                break;
            }
        }

        if (level == ExclusionLevel::L3)
            row.bound_ok = check_error_bound(p, std::max(1u, std::min(n_max, 5u)), policy)
                               .all_pass();
    } catch (const CertificationFailure& e) {
        row.error = std::string("certification: ") + e.what();
    } catch (const Error& e) {
        row.error = e.what();
    }
    return row;
}

int cmd_verify_grid(const CommonOpts& o, const std::string& level_str, long box, unsigned n_max) {
    LatticeKind kind = parse_kind(o.kind_str);
    ExclusionLevel level = parse_level(level_str);
    if (level == ExclusionLevel::L1) throw Usage("verify-grid runs at level L2 or L3");
    PrecisionPolicy policy = o.policy();

    Output output;
    output.format = o.format;
    output.open(o.out_path);

    if (o.format == "csv")
        output.out() << "unit,t,roots,expansion,chain,periodicity,bound,pass,error\n";
    else if (o.format == "text")
        output.out() << "# verify-grid kind=" << kind_tag(kind) << " level=" << level_tag(level)
                     << " box=" << box << " n=" << n_max << "\n";

    unsigned long total = 0, failures = 0;
    for (const auto& u : UnitValue::all(kind)) {
        ExclusionSet excl = builtin_exclusion_set(kind, level, u);
        for (long x = -box; x <= box; ++x) {
            for (long y = -box; y <= box; ++y) {
                LatticePoint t{kind, x, y};
                if (excl.contains(t)) continue;
                GridRow row = run_grid_case(QuadParams::unchecked(t, u), level, n_max, policy);
                ++total;
                if (!row.pass()) ++failures;
                if (o.format == "json") {
                    output.out() << json{{"u", row.unit},
                                         {"t", row.t},
                                         {"roots", row.roots_located},
                                         {"expansion", row.expansion_match},
                                         {"chain", row.chain_exact},
                                         {"periodicity", row.periodicity_ok},
                                         {"bound", row.bound_ok},
                                         {"pass", row.pass()},
                                         {"error", row.error}}
                                        .dump()
                                 << "\n";
                } else if (o.format == "csv") {
                    output.out() << row.unit << "," << row.t << "," << row.roots_located << ","
                                 << row.expansion_match << "," << row.chain_exact << ","
                                 << row.periodicity_ok << "," << row.bound_ok << ","
                                 << row.pass() << "," << row.error << "\n";
                } else if (!row.pass()) {
                    output.out() << "[FAIL] u=" << row.unit << " t=" << row.t << " "
                                 << row.error << "\n";
                }
            }
        }
    }
    if (o.format == "text")
        output.out() << "cases=" << total << " failures=" << failures << "\n";
    return failures == 0 ? kExitOk : kExitVerifyFail;
}

// -------------------------------------------------------------- exclusion --

int cmd_exclusion(const CommonOpts& o, const std::string& level_str) {
    LatticeKind kind = parse_kind(o.kind_str);
    ExclusionLevel level = parse_level(level_str);
    if (level == ExclusionLevel::L3) throw Usage("exclusion recompute runs at level L1 or L2");
    PrecisionPolicy policy = o.policy();

    Output output;
    output.format = o.format;
    output.open(o.out_path);
    bool all_equal = true;
    json rows = json::array();
    for (const auto& u : UnitValue::all(kind)) {
        ExclusionSet builtin = builtin_exclusion_set(kind, level, u);
        ExclusionSet recomputed = recompute_exclusion_set(kind, level, u, policy);
        bool equal = builtin.same_members(recomputed);
        all_equal = all_equal && equal;
        if (o.format == "json") {
            rows.push_back({{"unit", to_json(u.value())},
                            {"builtin", to_json(builtin)},
                            {"recomputed", to_json(recomputed)},
                            {"equal", equal},
                            {"size", builtin.members.size()}});
        } else {
            output.out() << "u=" << u.value().str() << " |set|=" << builtin.members.size()
                         << " equal=" << (equal ? "true" : "false") << "  members:";
            for (const auto& p : builtin.members) output.out() << " " << p.str();
            output.out() << "\n";
        }
    }
    if (o.format == "json") output.out() << rows.dump(2) << "\n";
    return all_equal ? kExitOk : kExitVerifyFail;
}

// ------------------------------------------------------------------ lucas --

int cmd_lucas(const CommonOpts& o) {
    const LatticeKind G = LatticeKind::Gaussian;
    QuadParams p = QuadParams::admissible_l3(LatticePoint{G, 3, 0}, UnitValue{LatticePoint{G, 1, 0}});
    PrecisionPolicy policy = o.policy();

    Output output;
    output.format = o.format;
    output.open(o.out_path);

    std::vector<FieldElement> h = h_sequence(p, 4);
    NewtonTrace tr = newton_trace(p, NewtonStartConcrete::AtZero, 4);
    bool ok = true;

    json j;
    j["h"] = json::array();
    output.out() << "h-sequence:";
    for (const auto& hv : h) {
        output.out() << " " << rational_string(hv.x());
        j["h"].push_back(rational_string(hv.x()));
    }
    output.out() << "\n";

    j["partial_sums"] = json::array();
    j["newton"] = json::array();
    for (unsigned n = 0; n <= 3; ++n) {
        FieldElement s = sierpinski_value(p, n);
        ok = ok && tr.iterates[n + 1] == s;
        output.out() << "S_" << n << " = " << rational_string(s.x()) << " = F^(" << n + 1
                     << ")(0): " << (tr.iterates[n + 1] == s ? "exact" : "MISMATCH") << "\n";
        j["partial_sums"].push_back(rational_string(s.x()));
        j["newton"].push_back(rational_string(tr.iterates[n + 1].x()));
    }

    // Eq. (3) words against S_n(t, 1)
    j["symmetric_cf"] = json::array();
    for (unsigned n = 1; n <= 3; ++n) {
        CFWord w = symmetric_simple_cf(3, n);
        bool eq = eval_cf(w) == sierpinski_value(p, n);
        ok = ok && eq;
        output.out() << "symmetric CF n=" << n << " length " << w.length() << ": "
                     << (eq ? "equals S_n" : "MISMATCH") << "\n";
        j["symmetric_cf"].push_back({{"n", n}, {"length", w.length()}, {"equal", eq}});
    }

    // certified |S_3 - alpha| < 2/rho^15
    BoundCheckReport bounds = check_error_bound(p, 3, policy);
    const BoundCheckRow& last = bounds.rows[4];  // n = 3, alpha side
    ok = ok && bounds.all_pass();
    output.out() << "certified |alpha - F^(3)(0)| <= " << decimal_string_upper(last.lhs_upper, 12)
                 << " < 2/rho^15 >= " << decimal_string(last.rhs_lower, 12) << " : "
                 << (last.pass ? "pass" : "FAIL") << "\n";
    j["bound"] = to_json(last, p);

    if (o.format == "json") output.out() << j.dump(2) << "\n";
    return ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Newton / ascending-series / Hurwitz-CF verification for quadratic units"};
    app.require_subcommand(1);

    CommonOpts expand_o, sym_o, grid_o, excl_o, lucas_o, bound_o;
    std::string t_str, u_str, root_str = "alpha";
    unsigned count = 6;
    auto* expand = app.add_subcommand("expand", "Hurwitz expansion vs the predicted periodic word");
    add_common(expand, expand_o);
    expand->add_option("-t", t_str, "parameter t (lattice literal)")->required();
    expand->add_option("-u", u_str, "unit u (lattice literal)")->required();
    expand->add_option("-n,--count", count, "number of partial denominators");
    expand->add_option("--root", root_str, "alpha or beta")
        ->check(CLI::IsMember({"alpha", "beta"}));

    unsigned sym_n = 4;
    auto* sym = app.add_subcommand("verify-symbolic", "prove the rational-function identities");
    add_common(sym, sym_o, false);
    sym->add_option("-n", sym_n, "largest n for the four identities");

    std::string grid_level = "L2";
    long grid_box = 5;
    unsigned grid_n = 3;
    auto* grid = app.add_subcommand("verify-grid", "run the full suite over a parameter box");
    add_common(grid, grid_o);
    grid->add_option("--level", grid_level, "exclusion level: L2 or L3");
    grid->add_option("--box", grid_box, "coordinate box bound");
    grid->add_option("-n", grid_n, "chain depth (exact identities up to n)");

    std::string excl_level = "L1";
    auto* excl = app.add_subcommand("exclusion", "builtin vs recomputed exclusion sets");
    add_common(excl, excl_o);
    excl->add_option("--level", excl_level, "exclusion level: L1 or L2");

    auto* lucas = app.add_subcommand("lucas", "the classical t=3, u=1 showcase");
    add_common(lucas, lucas_o, false);

    long bound_box = 5;
    unsigned bound_n = 5;
    auto* bound = app.add_subcommand("bound-check", "convergence bound over the L3 grid");
    add_common(bound, bound_o);
    bound->add_option("--box", bound_box, "coordinate box bound");
    bound->add_option("-n", bound_n, "largest n for the bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (expand->parsed()) return cmd_expand(expand_o, t_str, u_str, count, root_str);
        if (sym->parsed()) return cmd_verify_symbolic(sym_o, sym_n);
        if (grid->parsed()) return cmd_verify_grid(grid_o, grid_level, grid_box, grid_n);
        if (excl->parsed()) return cmd_exclusion(excl_o, excl_level);
        if (lucas->parsed()) return cmd_lucas(lucas_o);
        if (bound->parsed()) return cmd_verify_grid(bound_o, "L3", bound_box, bound_n);
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CertificationFailure& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return kExitCertFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
