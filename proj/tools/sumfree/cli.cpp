#include "sumfree/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumfree/bounds.hpp"
#include "sumfree/error.hpp"
#include "sumfree/group.hpp"
#include "sumfree/iscount.hpp"
#include "sumfree/linkgraph.hpp"
#include "sumfree/report.hpp"
#include "sumfree/verify.hpp"

namespace sumfree::cli {

namespace {

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (c.format == f) return;
    }
    std::string list;
    for (const char* f : allowed) list += (list.empty() ? "" : "|") + std::string(f);
    throw InvalidInput(c.command + ": --format must be one of " + list + ", got '" + c.format + "'");
}

// Writes to --out when given, otherwise to the command's stream.
void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.out, std::ios::binary);
    if (!file) throw InvalidInput("cannot open output file '" + c.out + "'");
    file << text;
}

std::size_t census_threads(const RunConfig& c) {
    if (c.threads > 0) return c.threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

mpfr_prec_t precision(const RunConfig& c) {
    if (c.precision_bits < kDefaultPrecisionBits || c.precision_bits > 4096) {
        throw InvalidInput("--precision-bits must lie in [128, 4096]");
    }
    return static_cast<mpfr_prec_t>(c.precision_bits);
}

std::string trim(std::string s) {
    const auto not_space = [](unsigned char ch) { return !std::isspace(ch); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::uint64_t parse_uint(const std::string& token, const std::string& what) {
    std::uint64_t v = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (token.empty() || ec != std::errc() || ptr != last) {
        throw InvalidInput("malformed " + what + " '" + token + "'");
    }
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::string t = trim(text);
    if (t.find('/') != std::string::npos) {
        const auto slash = t.find('/');
        const auto num = parse_uint(trim(t.substr(0, slash)), "fraction numerator");
        const auto den = parse_uint(trim(t.substr(slash + 1)), "fraction denominator");
        if (den == 0) throw InvalidInput("zero denominator in '" + text + "'");
        Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
        q.canonicalize();
        return q;
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(t, &used);
        if (used != t.size()) throw InvalidInput("malformed number '" + text + "'");
        return Rational(v);
    } catch (const std::logic_error&) {
        throw InvalidInput("malformed number '" + text + "'");
    }
}

ElementSet parse_element_set(const AbelianGroup& g, const std::string& spec) {
    ElementSet s(g.order());
    const std::string body = trim(spec);
    if (body.empty()) return s;
    std::stringstream tokens(body);
    std::string token;
    while (std::getline(tokens, token, ',')) {
        token = trim(token);
        if (token.empty()) throw InvalidInput("empty element in set '" + spec + "'");
        if (token.find(':') == std::string::npos) {
            const auto i = parse_uint(token, "element");
            if (i >= g.order()) {
                throw InvalidInput("element " + token + " out of range for " + g.name());
            }
            s.insert(i);
            continue;
        }
        GroupElement e;
        std::stringstream parts(token);
        std::string part;
        while (std::getline(parts, part, ':')) e.coords.push_back(parse_uint(trim(part), "coordinate"));
        if (token.back() == ':') throw InvalidInput("malformed element '" + token + "'");
        const auto& f = g.factor_orders();
        if (e.coords.size() != f.size()) {
            throw InvalidInput("element '" + token + "' needs " + std::to_string(f.size()) + " coordinates");
        }
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (e.coords[i] >= f[i]) throw InvalidInput("coordinate out of range in '" + token + "'");
        }
        s.insert(g.index_of(e));
    }
    return s;
}

int cmd_census(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json", "csv"});
    if (c.group.empty()) throw InvalidInput("census needs --group");
    const AbelianGroup g = parse_group_spec(c.group);
    const CensusOptions options{census_threads(c), c.breakdown ? c.breakdown_cap : c.census_cap};
    std::optional<MinKBreakdown> breakdown;
    BigCount total;
    if (c.breakdown) {
        breakdown = census_by_min_k(g, options);
        total = breakdown->total();
    } else {
        total = total_census(g, options);
    }
    const MinKBreakdown* b = breakdown ? &*breakdown : nullptr;
    if (c.format == "json") {
        emit(c, out, census_json(g, total, b));
    } else if (c.format == "csv") {
        emit(c, out, census_csv(g, total, b));
    } else {
        emit(c, out, census_text(g, total, b));
    }
    return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    VerifyOptions o;
    o.max_p = c.max_p;
    o.p = c.p;
    o.seed = c.seed;
    o.trials = c.trials;
    o.records = c.format == "json";
    if (c.eps) {
        if (!(*c.eps > 0.0 && *c.eps < 1.0)) throw InvalidInput("--eps must lie in (0, 1)");
        o.supersat_eps = *c.eps;
    }
    if (c.tau) {
        o.tau = parse_rational(*c.tau);
        if (sgn(*o.tau) <= 0) throw InvalidInput("--tau must be positive");
    }
    const auto& names = verify_suite_names();
    if (c.claims != "all" && std::find(names.begin(), names.end(), c.claims) == names.end()) {
        throw InvalidInput("unknown --claims '" + c.claims + "'");
    }
    if ((c.claims == "all" || c.claims == "supersat") && !c.seed) {
        throw InvalidInput("the supersat suite samples random triples; pass --seed");
    }
    const auto results = run_suites(c.claims, o);
    std::ostringstream text;
    bool all_passed = true;
    for (const auto& r : results) {
        all_passed = all_passed && r.passed();
        if (c.format == "json") {
            for (const auto& line : r.records) text << line << "\n";
            nlohmann::ordered_json summary;
            summary["suite"] = r.name;
            summary["checks"] = r.checks;
            summary["passed"] = r.passed();
            if (!r.passed()) summary["counterexample"] = r.failures.front();
            text << summary.dump() << "\n";
        } else {
            text << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks << " checks";
            if (!r.passed()) text << ", " << r.failures.size() << " failed";
            text << ")\n";
            if (!r.passed()) text << "  counterexample: " << r.failures.front() << "\n";
        }
    }
    emit(c, out, text.str());
    return all_passed ? kOk : kCheckFailed;
}

int cmd_bounds(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json", "csv"});
    if (!c.theorem) throw InvalidInput("bounds needs --theorem 1|7|8");
    const mpfr_prec_t prec = precision(c);
    const double eps = c.eps.value_or(kDefaultEpsilon);
    std::optional<AbelianGroup> g;
    if (!c.group.empty()) g = parse_group_spec(c.group);

    std::vector<BoundReport> reports;
    std::uint64_t n = 0;
    switch (*c.theorem) {
        case 1: {
            if (c.p) {
                n = *c.p;
            } else if (g) {
                if (!g->is_cyclic_prime_order()) throw InvalidInput("theorem 1 needs a cyclic group of prime order");
                n = g->order();
            } else {
                throw InvalidInput("theorem 1 needs --p or --group");
            }
            if (!g) g = AbelianGroup::make({n});
            auto pair = theorem1_bounds(n, prec);
            reports.push_back(std::move(pair.upper));
            reports.push_back(std::move(pair.lower));
            break;
        }
        case 7:
        case 8: {
            if (c.n) {
                n = *c.n;
                if (g && g->order() != n) throw InvalidInput("--N disagrees with the order of --group");
            } else if (g) {
                n = g->order();
            } else {
                throw InvalidInput("theorem " + std::to_string(*c.theorem) + " needs --N or --group");
            }
            if (*c.theorem == 7) {
                reports.push_back(theorem7_bound(n, eps, prec));
            } else {
                auto pair = theorem8_bounds(n, eps, prec);
                reports.push_back(std::move(pair.upper));
                reports.push_back(std::move(pair.lower));
            }
            break;
        }
        default:
            throw InvalidInput("--theorem must be 1, 7 or 8");
    }

    std::optional<BigCount> exact;
    constexpr std::uint64_t kExactColumnCap = 13;
    if (g && g->order() <= kExactColumnCap) exact = total_census(*g, CensusOptions{1, kExactColumnCap});

    std::ostringstream text;
    if (c.format == "json") {
        text << bound_reports_json(reports, exact);
    } else if (c.format == "csv") {
        bool header = true;
        for (const auto& r : reports) {
            text << bound_report_csv(r, header);
            header = false;
        }
    } else {
        for (const auto& r : reports) text << bound_report_text(r);
        if (exact) text << "exact census " << g->name() << " " << *exact << "\n";
    }
    emit(c, out, text.str());
    return kOk;
}

int cmd_linkgraph(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json", "dot"});
    if (c.group.empty()) throw InvalidInput("linkgraph needs --group");
    const AbelianGroup g = parse_group_spec(c.group);
    const ElementSet a = parse_element_set(g, c.set);
    const BipartiteLinkGraph h = build_link_graph(g, a);
    const auto gi = girth(h);
    const bool c4 = contains_c4(h);
    const BigCount count = count_independent_sets(h);

    std::ostringstream summary;
    summary << "group " << g.name() << "\n";
    summary << "vertices " << h.vertex_count() << "\n";
    summary << "edges " << h.edge_count() << "\n";
    summary << "degree " << h.degree();
    if (h.degree() == 1) summary << " (perfect matching)";
    if (h.degree() == 2) summary << " (disjoint even cycles)";
    summary << "\n";
    summary << "girth " << (gi ? std::to_string(*gi) : std::string("none")) << "\n";
    summary << "C4 " << (c4 ? "present" : "absent") << "\n";
    summary << "independent sets " << count << "\n";

    if (c.format == "text") {
        emit(c, out, summary.str());
        return kOk;
    }
    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["group"] = g.name();
        std::vector<std::size_t> members;
        for (auto i : a.indices()) members.push_back(i);
        j["set"] = members;
        j["degree"] = h.degree();
        j["girth"] = gi ? nlohmann::ordered_json(*gi) : nlohmann::ordered_json(nullptr);
        j["c4"] = c4;
        j["independent_sets"] = count.to_string();
        j["graph"] = nlohmann::ordered_json::parse(export_json(h));
        emit(c, out, j.dump(2) + "\n");
        return kOk;
    }
    if (c.out.empty()) {
        std::string commented;
        std::istringstream lines(summary.str());
        for (std::string line; std::getline(lines, line);) commented += "// " + line + "\n";
        out << commented << export_dot(h);
    } else {
        emit(c, out, export_dot(h));
        out << summary.str();
    }
    return kOk;
}

namespace {

void add_common(CLI::App* sub, RunConfig& c) {
    sub->add_option("--format", c.format, "Output format");
    sub->add_option("--out", c.out, "Write output to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Exact censuses and bound evaluation for sum-free triplets in finite abelian groups", "sumfree"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "sumfree 0.1.0");

    auto* census = app.add_subcommand("census", "Count sum-free triplets (A, B, C) of a group");
    census->add_option("--group", c.group, "Group, e.g. Z/3 or Z/2xZ/4")->required();
    census->add_flag("--breakdown", c.breakdown, "Split the count by min(|A|,|B|,|C|)");
    census->add_option("--threads", c.threads, "Worker threads (default: available parallelism)");
    add_common(census, c);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--claims", c.claims, "all|claim2|claim3|claim5|claim6|sandwich|supersat|codegree|witnesses");
    verify->add_option("--p", c.p, "Restrict prime-indexed suites to this prime");
    verify->add_option("--max-p", c.max_p, "Largest prime for claim2/claim5");
    verify->add_option("--eps", c.eps, "Supersaturation epsilon (default 0.3)");
    verify->add_option("--tau", c.tau, "Co-degree tau, decimal or a/b");
    verify->add_option("--seed", c.seed, "Seed for sampled checks");
    verify->add_option("--trials", c.trials, "Sampled triples per group");
    add_common(verify, c);

    auto* bounds = app.add_subcommand("bounds", "Evaluate upper and lower bound expressions");
    bounds->add_option("--theorem", c.theorem, "1 (Z/p), 7 (any group), 8 (smallest prime factor)")->required();
    bounds->add_option("--p", c.p, "Prime for theorem 1");
    bounds->add_option("--N", c.n, "Group order for theorems 7 and 8");
    bounds->add_option("--group", c.group, "Group; its order is used and small groups get an exact census");
    bounds->add_option("--eps", c.eps, "Epsilon (default 1e-4)");
    bounds->add_option("--precision-bits", c.precision_bits, "Interval precision in bits (default 128)");
    add_common(bounds, c);

    auto* link = app.add_subcommand("linkgraph", "Describe the link graph of a set A");
    link->add_option("--group", c.group, "Group")->required();
    link->add_option("--set", c.set, "Elements of A: indices or colon-separated coordinates, comma-separated")->required();
    add_common(link, c);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (census->parsed()) {
            c.command = "census";
            return cmd_census(c, out);
        }
        if (verify->parsed()) {
            c.command = "verify";
            return cmd_verify(c, out);
        }
        if (bounds->parsed()) {
            c.command = "bounds";
            return cmd_bounds(c, out);
        }
        c.command = "linkgraph";
        return cmd_linkgraph(c, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kCap;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PrecisionExhausted& e) {
        err << "undecidable: " << e.what() << "\n";
        return kCheckFailed;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace sumfree::cli
