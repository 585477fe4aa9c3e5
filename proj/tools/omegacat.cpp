// omegacat: command-line front end for the library.
// Exit status: 0 pass, 1 mathematical failure, 2 input error, 3 internal inconsistency.

#include <CLI11.hpp>
#include <iostream>

#include "omegacat/io/formats.hpp"
#include "omegacat/verify/acceptance.hpp"

using namespace omegacat;
using ojson = nlohmann::ordered_json;

namespace {

struct Outcome {
    ojson report = ojson::object();
    bool passed = true;
};

std::string scalar_text(const ojson& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_text(std::ostream& os, const ojson& j, const std::string& prefix) {
    for (const auto& [key, v] : j.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (v.is_object()) {
            render_text(os, v, name);
        } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const ojson& x) { return x.is_primitive(); })) {
            os << name << ":";
            for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : " ") << scalar_text(v[i]);
            os << "\n";
        } else if (v.is_array()) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (!v[i].is_object()) {
                    os << name << "[" << i << "]: " << v[i].dump() << "\n";
                    continue;
                }
                os << name << "[" << i << "]:";
                for (const auto& [k, x] : v[i].items()) os << " " << k << "=" << (x.is_primitive() ? scalar_text(x) : x.dump());
                os << "\n";
            }
        } else {
            os << name << ": " << scalar_text(v) << "\n";
        }
    }
}

ojson issues_json(const ValidationReport& r) {
    ojson out = ojson::array();
    for (const auto& i : r.issues) out.push_back(i.property + ": " + i.detail);
    return out;
}

std::string verdict(bool ok) { return ok ? "pass" : "fail"; }

io::json load(const std::string& path) {
    if (path.empty()) throw ParseError("--input is required");
    return io::read_file(path);
}

Outcome cmd_validate(const std::string& kind, const io::json& in) {
    Outcome o;
    o.report["kind"] = kind;
    if (kind == "complex") {
        ValidationReport r = validate(io::complex_from_json(in));
        o.passed = r.ok();
        o.report["issues"] = issues_json(r);
    } else if (kind == "omega") {
        FiniteOmegaCat a = io::omega_from_json(in);
        AxiomReport r = validate_axioms(a);
        o.passed = r.ok();
        ojson v = ojson::array();
        for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"levels", x.levels}, {"elements", x.elements}, {"detail", x.detail}});
        o.report["violations"] = v;
    } else if (kind == "simplicial") {
        ValidationReport r = validate_simplicial(io::simplicial_from_json(in));
        o.passed = r.ok();
        o.report["issues"] = issues_json(r);
    } else if (kind == "presheaf") {
        Presheaf f = io::presheaf_from_json(in);
        ValidationReport r = validate_presheaf(f);
        o.passed = r.ok();
        o.report["issues"] = issues_json(r);
        ojson sheaf = ojson::array();
        for (const auto& v : levelwise_sheaf_violations(f))
            sheaf.push_back({{"open", f.site().name(v.open)}, {"cover", v.cover}, {"degree", v.degree}, {"detail", v.detail}});
        o.report["levelwise_sheaf"] = sheaf.empty() ? "yes" : "no";
        o.report["sheaf_violations"] = sheaf;
    } else {
        throw ParseError("unknown kind " + kind);
    }
    o.report["verdict"] = verdict(o.passed);
    return o;
}

Outcome cmd_homology(const io::json& in) {
    Outcome o;
    ChainComplex c = io::complex_from_json(in);
    ValidationReport v = validate(c);
    if (!v.ok()) {
        o.passed = false;
        o.report["issues"] = issues_json(v);
        return o;
    }
    ojson h = ojson::array();
    for (int n = c.min_degree(); n <= c.max_degree() && !c.empty(); ++n) h.push_back({{"degree", n}, {"H", homology(c, n).describe()}});
    o.report["homology"] = h;
    return o;
}

Outcome cmd_quasi_iso(const io::json& in) {
    Outcome o;
    ChainMap f = io::chain_map_from_json(in);
    ValidationReport v = validate(f);
    o.report["chain_map"] = verdict(v.ok());
    if (!v.ok()) {
        o.passed = false;
        o.report["issues"] = issues_json(v);
        return o;
    }
    ojson per = ojson::array();
    auto [lo, hi] = f.span();
    for (int n = lo; n <= hi; ++n)
        per.push_back({{"degree", n},
                       {"source", homology(f.source(), n).describe()},
                       {"target", homology(f.target(), n).describe()},
                       {"iso", is_isomorphism(induced_on_homology(f, n))}});
    o.report["homology"] = per;
    o.passed = is_quasi_iso(f);
    o.report["quasi_isomorphism"] = o.passed ? "yes" : "no";
    return o;
}

Outcome cmd_roundtrip(const io::json& in) {
    Outcome o;
    ChainComplex c = io::complex_from_json(in);
    const bool unit = is_chain_iso(qp_unit(c));
    PicOmegaCat a = p_of(c);
    PQUnit u = pq_unit(a);
    const bool bij = is_isomorphism(u.phi), st = preserves_structure(u.phi, a, u.pq.cat());
    o.report["check"] = "QP/PQ roundtrip";
    o.report["qp_unit_iso"] = unit;
    o.report["pq_unit_bijective"] = bij;
    o.report["pq_unit_preserves_structure"] = st;
    o.passed = unit && bij && st;
    o.report["verdict"] = verdict(o.passed);
    return o;
}

Outcome cmd_oriental(int n) {
    Outcome o;
    const CellCategory& c = oriental(n);
    AxiomReport r = validate_axioms(*c.cat);
    o.report["n"] = n;
    o.report["atoms"] = atoms(c.complex).size();
    o.report["cells"] = c.cells.size();
    o.report["top_cell"] = c.cat->name(top_cell(c));
    o.report["freely_generated"] = c.freely_generated;
    o.report["axioms"] = verdict(r.ok());
    o.passed = r.ok() && c.freely_generated;
    return o;
}

Outcome cmd_nerve(const io::json& in, int n, const std::string& via, bool compare) {
    Outcome o;
    ChainComplex c = io::complex_from_json(in);
    o.report["n"] = n;
    if (compare) {
        NerveComparison cmp = compare_nerves(c, n);
        ojson lv = ojson::array();
        for (std::size_t k = 0; k < cmp.enumerated.size(); ++k)
            lv.push_back(std::to_string(k) + ": " + std::to_string(cmp.enumerated[k]) + " = " +
                         (k < cmp.via_dk.size() ? std::to_string(cmp.via_dk[k]) : std::string("?")));
        o.report["check"] = "nerve = Dold-Kan";
        o.report["levels"] = lv;
        o.report["bijection"] = cmp.bijective;
        o.report["faces"] = cmp.faces;
        o.report["degeneracies"] = cmp.degeneracies;
        o.report["thin"] = cmp.thin;
        o.report["failures"] = cmp.failures;
        o.passed = cmp.ok();
        o.report["verdict"] = verdict(o.passed);
        return o;
    }
    ojson counts = ojson::array();
    if (via == "enumerate") {
        PicRealization real = from_pic(p_of(c));
        for (int k = 0; k <= n; ++k) counts.push_back(nerve_enumerate(*real.cat, k).size());
    } else {
        SimplicialAbGroup g = dk_inverse(c, n);
        for (int k = 0; k <= n; ++k) counts.push_back(to_string(g.level(k).order()));
    }
    o.report["via"] = via;
    o.report["simplices"] = counts;
    return o;
}

ojson glueing_json(const FiniteSite& s, const GlueingVerdict& g) {
    ojson j{{"open", s.name(g.open)}, {"cover", g.cover}, {"k", g.k}, {"exists", g.exists}, {"unique", g.unique}, {"method", g.method}};
    return j;
}

Outcome cmd_descent(const io::json& in, bool cech, bool omega, int kmax) {
    Outcome o;
    Presheaf f = io::presheaf_from_json(in);
    ValidationReport v = validate_presheaf(f);
    if (!v.ok()) throw ParseError("presheaf is not functorial: " + v.issues.front().detail);
    const FiniteSite& s = f.site();
    if (kmax < 0) kmax = f.max_degree() + 1;
    if (cech) {
        CechDescentReport r = cech_descent_check(f);
        ojson fails = ojson::array();
        for (const auto& e : r.entries)
            if (!e.ok()) fails.push_back({{"open", s.name(e.open)}, {"cover", e.cover}, {"degrees", e.failing_degrees}});
        o.report["cech"] = verdict(r.ok());
        o.report["cech_failures"] = fails;
        o.passed = o.passed && r.ok();
    }
    if (omega) {
        GlueingReport r = omega_descent_check(f, kmax);
        ojson fails = ojson::array();
        for (const auto& e : r.entries)
            if (!e.ok()) fails.push_back(glueing_json(s, e));
        o.report["omega"] = verdict(r.ok());
        o.report["kmax"] = kmax;
        o.report["omega_failures"] = fails;
        o.passed = o.passed && r.ok();
    }
    return o;
}

Outcome cmd_cech_cohomology(const io::json& in, const std::string& open, int n) {
    Outcome o;
    Presheaf g = io::presheaf_from_json(in);
    const FiniteSite& s = g.site();
    const int v = s.find(open);
    if (v < 0) throw ParseError("unknown open " + open);
    ojson covers = ojson::array();
    for (std::size_t ci = 0; ci < s.covers(v).size(); ++ci) {
        ojson hs = ojson::array();
        for (int k = 0; k <= n; ++k) hs.push_back(cech_cohomology(g, k, v, s.covers(v)[ci]).describe());
        std::string members;
        for (int u : s.covers(v)[ci]) members += (members.empty() ? "" : " ") + s.name(u);
        covers.push_back({{"cover", members}, {"H", hs}});
    }
    o.report["open"] = open;
    o.report["covers"] = covers;
    return o;
}

Outcome cmd_deloop(const io::json& in) {
    Outcome o;
    DeloopingReport r = delooping_check(io::complex_from_json(in));
    o.report["check"] = "delooping";
    o.report["acyclic"] = r.acyclic;
    o.report["kernel_recovers"] = r.kernel_recovers;
    o.report["short_exact"] = r.short_exact;
    o.report["failures"] = r.failures;
    o.passed = r.ok();
    o.report["verdict"] = verdict(o.passed);
    return o;
}

Outcome cmd_acceptance(std::uint64_t seed) {
    Outcome o;
    ojson lines = ojson::array();
    for (std::size_t i = 0; i < verify::criteria().size(); ++i) {
        verify::CriterionResult r = verify::run_criterion(i, seed);
        lines.push_back({{"id", r.id}, {"check", r.tag}, {"verdict", verdict(r.passed)}, {"detail", r.detail}});
        o.passed = o.passed && r.passed;
    }
    o.report["seed"] = seed;
    o.report["criteria"] = lines;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chain complexes, Picard omega-categories, nerves and descent"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string input, format = "text";
    std::uint64_t seed = 1;
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto with_input = [&](CLI::App* c) { c->add_option("--input", input, "JSON input file")->required(); };

    std::string kind;
    auto* validate_cmd = app.add_subcommand("validate", "check the structural axioms of an input");
    validate_cmd->add_option("kind", kind, "complex | omega | simplicial | presheaf")
        ->required()
        ->check(CLI::IsMember({"complex", "omega", "simplicial", "presheaf"}));
    with_input(validate_cmd);

    auto* homology_cmd = app.add_subcommand("homology", "homology groups of a complex");
    with_input(homology_cmd);
    auto* qi_cmd = app.add_subcommand("quasi-iso", "is a chain map a quasi-isomorphism");
    with_input(qi_cmd);
    auto* rt_cmd = app.add_subcommand("roundtrip-pq", "Q(P(c)) = c and A = P(Q(A)) for a complex");
    with_input(rt_cmd);

    int n = 2;
    auto* or_cmd = app.add_subcommand("oriental", "build and validate the oriental of the n-simplex");
    or_cmd->add_option("--n", n, "simplex dimension")->check(CLI::Range(0, 6));

    std::string via = "enumerate";
    bool compare = false;
    auto* nerve_cmd = app.add_subcommand("nerve", "nerve of P(c) by oriental enumeration or Dold-Kan");
    with_input(nerve_cmd);
    nerve_cmd->add_option("--n,--nmax", n, "top simplicial level")->check(CLI::Range(0, 6));
    nerve_cmd->add_option("--via", via)->check(CLI::IsMember({"enumerate", "dk"}));
    nerve_cmd->add_flag("--compare", compare, "compare both computations");

    bool cech = false, omega = false, both = false;
    int kmax = -1;
    auto* descent_cmd = app.add_subcommand("descent", "Cech descent and omega-descent of a presheaf");
    with_input(descent_cmd);
    descent_cmd->add_flag("--cech", cech);
    descent_cmd->add_flag("--omega", omega);
    descent_cmd->add_flag("--both", both);
    descent_cmd->add_option("--kmax", kmax, "glueing depth (default: top degree + 1)");

    std::string open = "X";
    auto* ch_cmd = app.add_subcommand("cech-cohomology", "Cech cohomology of a degree-0 presheaf");
    with_input(ch_cmd);
    ch_cmd->add_option("--open", open);
    ch_cmd->add_option("--n", n, "top cohomological degree")->check(CLI::Range(0, 16));

    auto* dl_cmd = app.add_subcommand("deloop-check", "delooping complex of c is acyclic with kernel c");
    with_input(dl_cmd);

    auto* acc_cmd = app.add_subcommand("acceptance", "run the acceptance suite");
    acc_cmd->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Outcome out;
    try {
        if (*validate_cmd) out = cmd_validate(kind, load(input));
        else if (*homology_cmd) out = cmd_homology(load(input));
        else if (*qi_cmd) out = cmd_quasi_iso(load(input));
        else if (*rt_cmd) out = cmd_roundtrip(load(input));
        else if (*or_cmd) out = cmd_oriental(n);
        else if (*nerve_cmd) out = cmd_nerve(load(input), n, via, compare);
        else if (*descent_cmd) {
            if (both || (!cech && !omega)) cech = omega = true;
            out = cmd_descent(load(input), cech, omega, kmax);
        } else if (*ch_cmd) out = cmd_cech_cohomology(load(input), open, n);
        else if (*dl_cmd) out = cmd_deloop(load(input));
        else if (*acc_cmd) out = cmd_acceptance(seed);
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }

    out.report["status"] = out.passed ? "pass" : "fail";
    if (format == "json") std::cout << out.report.dump(2) << "\n";
    else render_text(std::cout, out.report, "");
    return out.passed ? 0 : 1;
}
