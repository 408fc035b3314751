#include "ehrhart/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ehrhart/analysis.hpp"
#include "ehrhart/formulas.hpp"
#include "ehrhart/matroid.hpp"
#include "ehrhart/oracle.hpp"
#include "ehrhart/polynomial.hpp"

namespace ehrhart::cli {

using json = nlohmann::ordered_json;

namespace {

std::vector<int> parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition entry '" + item + "'");
        }
        if (pos != item.size() || v < 1)
            throw std::invalid_argument("malformed partition entry '" + item + "'");
        parts.push_back(v);
    }
    if (parts.empty())
        throw std::invalid_argument("empty partition string");
    return parts;
}

std::int64_t to_int64(const mpz_class& z) {
    if (!z.fits_slong_p())
        throw std::overflow_error("value does not fit in a 64-bit integer");
    return z.get_si();
}

json hstar_json(const HStarVector& h) {
    json a = json::array();
    for (const auto& c : h.coeffs)
        a.push_back(to_int64(c));
    return a;
}

std::string hstar_text(const HStarVector& h) {
    std::string s = "[";
    for (size_t i = 0; i < h.coeffs.size(); ++i) {
        if (i)
            s += ", ";
        s += h.coeffs[i].get_str();
    }
    return s + "]";
}

std::string coeff_list_text(const Polynomial& p) {
    std::string s = "[";
    const auto strs = coefficient_strings(p);
    for (size_t i = 0; i < strs.size(); ++i) {
        if (i)
            s += ", ";
        s += strs[i];
    }
    return s + "]";
}

// One row of a verification sweep. info is always rendered, so reports list
// the observed flags even for passing rows.
struct CheckItem {
    std::string label;
    bool pass = true;
    std::string info;
};

struct Sweep {
    std::string name;
    std::vector<CheckItem> items;

    bool pass() const {
        return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; });
    }
    int passed() const {
        return static_cast<int>(std::count_if(items.begin(), items.end(),
                                              [](const CheckItem& i) { return i.pass; }));
    }
};

void render_sweep_text(const Sweep& s, std::ostream& out) {
    for (const auto& i : s.items) {
        out << (i.pass ? "ok   " : "FAIL ") << i.label;
        if (!i.info.empty())
            out << "  " << i.info;
        out << "\n";
    }
    out << s.name << ": " << s.passed() << "/" << s.items.size() << " checks passed\n";
}

json sweep_json(const Sweep& s) {
    json items = json::array();
    for (const auto& i : s.items)
        items.push_back(json{{"item", i.label}, {"pass", i.pass}, {"info", i.info}});
    return json{{"check", s.name},
                {"passed", s.passed()},
                {"total", s.items.size()},
                {"pass", s.pass()},
                {"items", std::move(items)}};
}

std::string partition_label(const Rank2Matroid& m) {
    return "n=" + std::to_string(m.ground_set_size()) + " partition=" + m.to_string();
}

Sweep sweep_positivity(int n_lo, int n_hi) {
    Sweep s{"positivity", {}};
    for (int n = n_lo; n <= n_hi; ++n) {
        for (const auto& m : enumerate_partitions(n, 2)) {
            const Polynomial p = ehr_matroid(m);
            const PositivityResult r = positivity_check(p);
            const bool constant_one = p.coefficient(0) == Rational(1);
            CheckItem item{partition_label(m), r.positive && constant_one, ""};
            if (!r.positive && r.witness)
                item.info = "coefficient of t^" + std::to_string(r.witness->first) + " = " +
                            r.witness->second.to_string();
            else if (!constant_one)
                item.info = "constant term != 1";
            s.items.push_back(std::move(item));
        }
    }
    return s;
}

const char* strictness_word(bool strict, bool ok) {
    if (!ok)
        return "violated";
    return strict ? "strict" : "non-strict";
}

Sweep sweep_bounds(int n_lo, int n_hi) {
    Sweep s{"bounds", {}};
    for (int n = n_lo; n <= n_hi; ++n) {
        for (const auto& m : enumerate_partitions(n, 3)) {
            const Classification cls = classify(m);
            const BoundsReport r = bounds_check(m);
            const bool pass = r.lower_ok && r.upper_ok &&
                              r.lower_strict_posdeg == !cls.minimal &&
                              r.upper_strict_posdeg == !cls.uniform;
            std::string info = std::string("lower=") +
                               strictness_word(r.lower_strict_posdeg, r.lower_ok) +
                               " upper=" + strictness_word(r.upper_strict_posdeg, r.upper_ok);
            if (cls.minimal)
                info += " (minimal)";
            if (cls.uniform)
                info += " (uniform)";
            s.items.push_back({partition_label(m), pass, std::move(info)});
        }
    }
    return s;
}

Sweep sweep_superadditivity(int n_lo, int n_hi) {
    Sweep s{"superadditivity", {}};
    for (int n = n_lo; n <= n_hi; ++n) {
        for (int b = 0; b <= n; ++b) {
            const ComparisonResult r = superadditivity_check(0, b, n);
            s.items.push_back({"n=" + std::to_string(n) + " a=0 b=" + std::to_string(b),
                               r == ComparisonResult::Equal, to_string(r)});
        }
        for (int a = 1; a <= n; ++a) {
            for (int b = a; a + b <= n; ++b) {
                const ComparisonResult r = superadditivity_check(a, b, n);
                s.items.push_back(
                    {"n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b),
                     r == ComparisonResult::LEqStrictPositiveDegree, to_string(r)});
                const ComparisonResult step = stepping_check(a, b, n);
                s.items.push_back({"n=" + std::to_string(n) + " step a=" + std::to_string(a) +
                                       " b=" + std::to_string(b),
                                   step != ComparisonResult::Incomparable, to_string(step)});
            }
        }
    }
    return s;
}

Sweep sweep_oracle(int n_lo, int n_hi, bool unsafe_no_guard) {
    Sweep s{"oracle", {}};
    for (int n = n_lo; n <= n_hi; ++n) {
        for (const auto& m : enumerate_partitions(n, 2)) {
            std::vector<std::pair<long, std::int64_t>> values;
            for (long t = 0; t < n; ++t)
                values.emplace_back(t, count_lattice_points(m, t, unsafe_no_guard));
            bool pass = false;
            std::string info;
            try {
                const Polynomial interp = interpolate_ehrhart(values, n - 1);
                pass = interp == ehr_matroid(m);
                if (!pass)
                    info = "interpolant " + coeff_list_text(interp) + " != formula " +
                           coeff_list_text(ehr_matroid(m));
            } catch (const std::runtime_error& e) {
                info = e.what();
            }
            s.items.push_back({partition_label(m), pass, std::move(info)});
        }
    }
    return s;
}

std::string certificate_info(const RootCertificate& c) {
    std::ostringstream os;
    os << "degree=" << c.degree << " distinct=" << c.distinct_real_roots << " real_rooted="
       << (c.real_rooted ? "true" : "false")
       << " all_negative=" << (c.all_roots_negative ? "true" : "false")
       << " unimodal=" << (c.unimodal ? "true" : "false")
       << " log_concave=" << (c.log_concave ? "true" : "false");
    return os.str();
}

Sweep sweep_roots(int n_lo, int n_hi) {
    Sweep s{"roots", {}};
    {
        const HStarVector h3 = hstar_matroid(Rank2Matroid({1, 1, 1}));
        s.items.push_back({"n=3 partition=1,1,1 base case",
                           h3 == HStarVector({1}, 2), "hstar=" + hstar_text(h3)});
        const HStarVector h4 = hstar_matroid(Rank2Matroid({2, 1, 1}));
        s.items.push_back({"n=4 partition=2,1,1 base case",
                           h4 == HStarVector({1, 1}, 3), "hstar=" + hstar_text(h4)});
    }
    for (int n = std::max(4, n_lo); n <= n_hi; ++n) {
        for (int lambda = 0; 2 * lambda <= n && n - lambda >= 3; ++lambda) {
            std::vector<int> parts(static_cast<size_t>(lambda), 2);
            parts.insert(parts.end(), static_cast<size_t>(n - 2 * lambda), 1);
            const Rank2Matroid m(parts);
            const HStarVector h = hstar_matroid(m);
            const bool closed_form_ok = h == hstar_sparse_paving(n, lambda);
            if (h.coeffs == std::vector<mpz_class>{1} ||
                h.coeffs == std::vector<mpz_class>{1, 1}) {
                s.items.push_back({partition_label(m) + " base case", closed_form_ok,
                                   "hstar=" + hstar_text(h)});
                continue;
            }
            const RootCertificate cert = real_root_certificate(h);
            const bool positive =
                std::all_of(h.coeffs.begin(), h.coeffs.end(), [](const mpz_class& c) { return c > 0; });
            const bool implication_chain =
                !(cert.real_rooted && positive) || (cert.log_concave && cert.unimodal);
            const bool pass = closed_form_ok && cert.real_rooted && cert.all_roots_negative &&
                              cert.degree == n / 2 && cert.unimodal && cert.log_concave &&
                              implication_chain;
            s.items.push_back({partition_label(m), pass, certificate_info(cert)});
        }
    }
    return s;
}

Sweep sweep_lemmas() {
    Sweep s{"lemmas", {}};
    for (int n = 0; n <= 20; ++n) {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i)
            worst = std::max(worst, trig_identity_residual(n, 1.45 * i / 49));
        std::ostringstream os;
        os << "max_residual=" << std::scientific << std::setprecision(2) << worst;
        s.items.push_back({"trig n=" + std::to_string(n) + " grid=50", worst < 1e-9, os.str()});
    }
    for (int a = 1; a <= 2; ++a) {
        for (int n = 9; n <= 50; ++n) {
            const double bound = static_cast<double>(a) / n;
            double margin = bound;
            for (int i = 1; i <= 100; ++i) {
                const double v = bounds_lemma_value(a, n, i / 100.0);
                margin = std::min(margin, std::min(bound - v, v + bound));
            }
            std::ostringstream os;
            os << "margin=" << std::scientific << std::setprecision(2) << margin;
            s.items.push_back({"bounds a=" + std::to_string(a) + " n=" + std::to_string(n) +
                                   " grid=100",
                               margin > 1e-9, os.str()});
        }
    }
    return s;
}

int emit_sweeps(const std::vector<Sweep>& sweeps, bool as_json, std::ostream& out) {
    bool all_pass = true;
    for (const auto& s : sweeps)
        all_pass = all_pass && s.pass();
    if (as_json) {
        if (sweeps.size() == 1) {
            out << sweep_json(sweeps[0]).dump() << "\n";
        } else {
            json sections = json::array();
            for (const auto& s : sweeps)
                sections.push_back(sweep_json(s));
            out << json{{"check", "all"}, {"pass", all_pass}, {"sections", std::move(sections)}}.dump()
                << "\n";
        }
    } else {
        for (const auto& s : sweeps)
            render_sweep_text(s, out);
        if (sweeps.size() > 1)
            out << "all: " << (all_pass ? "PASS" : "FAIL") << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Ehrhart polynomials, h*-vectors and verification sweeps "
                 "for rank-2 matroid base polytopes"};
    app.require_subcommand(1);

    std::string partition_str;
    long t = -1;
    int single_n = 0;
    int max_n = 0;
    bool as_json = false;
    bool unsafe_no_guard = false;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "machine-readable output"); };
    auto add_partition = [&](CLI::App* cmd) {
        cmd->add_option("--partition", partition_str,
                        "comma-separated hyperplane sizes, e.g. 2,1,1 (order-insensitive)")
            ->required();
    };

    CLI::App* cmd_ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial and h*-vector of a matroid");
    add_partition(cmd_ehrhart);
    add_json(cmd_ehrhart);

    CLI::App* cmd_hstar = app.add_subcommand("hstar", "h*-vector of a matroid");
    add_partition(cmd_hstar);
    add_json(cmd_hstar);

    CLI::App* cmd_roots = app.add_subcommand("roots", "real-rootedness certificate for the h*-vector");
    add_partition(cmd_roots);
    add_json(cmd_roots);

    CLI::App* cmd_count = app.add_subcommand("count", "brute-force lattice point count vs formula");
    add_partition(cmd_count);
    cmd_count->add_option("--t", t, "dilation factor")->required();
    cmd_count->add_flag("--unsafe-no-guard", unsafe_no_guard, "lift the n <= 10, t <= 8 guard");
    add_json(cmd_count);

    CLI::App* cmd_regions = app.add_subcommand("regions", "region counts vs closed formulas");
    cmd_regions->add_option("--n", single_n, "ambient size n")->required();
    cmd_regions->add_option("--t", t, "dilation factor")->required();
    cmd_regions->add_flag("--unsafe-no-guard", unsafe_no_guard, "lift the n <= 10, t <= 8 guard");
    add_json(cmd_regions);

    CLI::App* cmd_verify = app.add_subcommand("verify", "verification sweeps");
    cmd_verify->require_subcommand(1);
    struct VerifySpec {
        const char* name;
        const char* help;
        CLI::App* cmd = nullptr;
    };
    VerifySpec verifies[] = {
        {"positivity", "Ehrhart positivity for every partition", nullptr},
        {"bounds", "coefficientwise bounds for every connected partition", nullptr},
        {"superadditivity", "superadditivity and the stepping inequality", nullptr},
        {"oracle", "formulas against brute-force interpolation", nullptr},
        {"roots", "real-rootedness certificates for sparse paving matroids", nullptr},
        {"lemmas", "floating-point spot checks of the analytic lemmas", nullptr},
        {"all", "all of the above", nullptr},
    };
    for (auto& v : verifies) {
        v.cmd = cmd_verify->add_subcommand(v.name, v.help);
        add_json(v.cmd);
        if (std::string(v.name) != "lemmas") {
            auto* n_opt = v.cmd->add_option("--n", single_n, "check a single ground-set size");
            auto* max_opt = v.cmd->add_option("--max-n", max_n, "sweep ground-set sizes up to N");
            n_opt->excludes(max_opt);
        }
        if (std::string(v.name) == "oracle")
            v.cmd->add_flag("--unsafe-no-guard", unsafe_no_guard, "lift the n <= 10, t <= 8 guard");
    }

    try {
        std::reverse(args.begin(), args.end());  // CLI11 consumes the vector back to front
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (cmd_ehrhart->parsed()) {
            const Rank2Matroid m(parse_partition(partition_str));
            const Polynomial p = ehr_matroid(m);
            const HStarVector h = hstar_matroid(m);
            if (as_json) {
                json doc{{"n", m.ground_set_size()},
                         {"connected", m.connected()},
                         {"ehrhart", coefficient_strings(p)},
                         {"hstar", hstar_json(h)}};
                out << doc.dump() << "\n";
            } else {
                out << "n: " << m.ground_set_size() << "\n"
                    << "connected: " << (m.connected() ? "true" : "false") << "\n"
                    << "ehrhart: " << coeff_list_text(p) << "  (" << p.to_string() << ")\n"
                    << "hstar: " << hstar_text(h) << "\n";
            }
            return 0;
        }
        if (cmd_hstar->parsed()) {
            const Rank2Matroid m(parse_partition(partition_str));
            const HStarVector h = hstar_matroid(m);
            if (as_json) {
                json doc{{"n", m.ground_set_size()},
                         {"connected", m.connected()},
                         {"ambient_dim", h.ambient_dim},
                         {"hstar", hstar_json(h)}};
                out << doc.dump() << "\n";
            } else {
                out << "n: " << m.ground_set_size() << "\n"
                    << "connected: " << (m.connected() ? "true" : "false") << "\n"
                    << "ambient_dim: " << h.ambient_dim << "\n"
                    << "hstar: " << hstar_text(h) << "\n";
            }
            return 0;
        }
        if (cmd_roots->parsed()) {
            const Rank2Matroid m(parse_partition(partition_str));
            const HStarVector h = hstar_matroid(m);
            const RootCertificate c = real_root_certificate(h);
            if (as_json) {
                json doc{{"n", m.ground_set_size()},
                         {"hstar", hstar_json(h)},
                         {"degree", c.degree},
                         {"distinct_real_roots", c.distinct_real_roots},
                         {"real_rooted", c.real_rooted},
                         {"all_roots_negative", c.all_roots_negative},
                         {"unimodal", c.unimodal},
                         {"log_concave", c.log_concave}};
                out << doc.dump() << "\n";
            } else {
                out << "n: " << m.ground_set_size() << "\n"
                    << "hstar: " << hstar_text(h) << "\n"
                    << certificate_info(c) << "\n";
            }
            return 0;
        }
        if (cmd_count->parsed()) {
            const Rank2Matroid m(parse_partition(partition_str));
            const std::int64_t oracle = count_lattice_points(m, t, unsafe_no_guard);
            const Rational formula = ehr_matroid(m).eval(Rational(t));
            const bool match = formula == Rational(oracle);
            if (as_json) {
                json doc{{"partition", m.parts()},
                         {"n", m.ground_set_size()},
                         {"t", t},
                         {"count", oracle},
                         {"formula", to_int64(formula.numerator())},
                         {"match", match}};
                out << doc.dump() << "\n";
            } else {
                out << "count(" << m.to_string() << "; t=" << t << ") = " << oracle
                    << "  formula = " << formula.to_string() << "  "
                    << (match ? "ok" : "MISMATCH") << "\n";
            }
            return match ? 0 : 1;
        }
        if (cmd_regions->parsed()) {
            if (single_n < 2)
                throw std::invalid_argument("regions: n must be >= 2");
            Sweep s{"regions", {}};
            auto check = [&](const Region& r, const Polynomial& formula) {
                const std::int64_t count = count_region(r, t, unsafe_no_guard);
                const Rational expect = formula.eval(Rational(t));
                const bool match = expect == Rational(count);
                s.items.push_back({r.to_string() + " t=" + std::to_string(t), match,
                                   "count=" + std::to_string(count) +
                                       " formula=" + expect.to_string()});
            };
            for (int k = 1; k <= single_n - 1; ++k) {
                check(Region::q(k, single_n, false), ehr_q(k, single_n, false));
                check(Region::q(k, single_n, true), ehr_q(k, single_n, true));
            }
            for (int l = 1; l <= single_n - 1; ++l)
                check(Region::r_halfopen(l, single_n), ehr_r_halfopen(l, single_n));
            check(Region::hypersimplex(single_n), ehr_hypersimplex(single_n));
            return emit_sweeps({s}, as_json, out);
        }

        // verify subcommands; --n restricts to one ground-set size, --max-n
        // overrides the per-check default sweep limit
        auto span = [&](int def_lo, int def_hi) -> std::pair<int, int> {
            if (single_n > 0)
                return {single_n, single_n};
            return {def_lo, max_n > 0 ? max_n : def_hi};
        };
        std::string name;
        for (const auto& v : verifies)
            if (v.cmd->parsed())
                name = v.name;
        std::vector<Sweep> sweeps;
        if (name == "positivity") {
            const auto [lo, hi] = span(2, 12);
            sweeps.push_back(sweep_positivity(lo, hi));
        } else if (name == "bounds") {
            const auto [lo, hi] = span(3, 12);
            sweeps.push_back(sweep_bounds(lo, hi));
        } else if (name == "superadditivity") {
            const auto [lo, hi] = span(2, 15);
            sweeps.push_back(sweep_superadditivity(lo, hi));
        } else if (name == "oracle") {
            const auto [lo, hi] = span(2, 7);
            sweeps.push_back(sweep_oracle(lo, hi, unsafe_no_guard));
        } else if (name == "roots") {
            const auto [lo, hi] = span(4, 30);
            sweeps.push_back(sweep_roots(lo, hi));
        } else if (name == "lemmas") {
            sweeps.push_back(sweep_lemmas());
        } else if (name == "all") {
            const int hi = max_n > 0 ? max_n : 10;
            sweeps.push_back(sweep_positivity(2, hi));
            sweeps.push_back(sweep_bounds(3, hi));
            sweeps.push_back(sweep_superadditivity(2, hi));
            sweeps.push_back(sweep_oracle(2, std::min(hi, 7), unsafe_no_guard));
            sweeps.push_back(sweep_roots(4, hi));
            sweeps.push_back(sweep_lemmas());
        }
        return emit_sweeps(sweeps, as_json, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ehrhart::cli
