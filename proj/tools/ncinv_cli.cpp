// ncinv: command-line front end. JSON (schema 1) or plain text on stdout, diagnostics on stderr.
// Exit codes: 0 success, 1 invalid parameters, 2 internal inconsistency.

#include "ncinv/auslander.hpp"
#include "ncinv/errors.hpp"
#include "ncinv/hj_series.hpp"
#include "ncinv/invariants.hpp"
#include "ncinv/presentations.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>

using json = nlohmann::ordered_json;
using namespace ncinv;

namespace {

// ---- exact serialization ----

json scalar_json(const CycloScalar& c) {
    if (c.is_rational()) return rational_str(c.to_rational());
    json coeffs = json::array();
    for (auto& r : c.coeffs()) coeffs.push_back(rational_str(r));
    return {{"order", c.order()}, {"coeffs", coeffs}};
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

CycloScalar scalar_from_json(const json& j) {
    if (j.is_string()) return CycloScalar(parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return CycloScalar(j.get<long>());
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) throw std::invalid_argument("malformed scalar " + j.dump());
    long m = j["order"].get<long>();
    CycloScalar out(0);
    long e = 0;
    for (auto& c : j["coeffs"]) out += CycloScalar(parse_rational(c.get<std::string>())) * CycloScalar::root_of_unity(m, e++);
    return out;
}

json elt_json(const AlgebraElt& a) {
    json terms = json::array();
    for (auto& [m, c] : a.terms()) terms.push_back({{"u", m.i}, {"v", m.j}, {"c", scalar_json(c)}});
    return {{"str", a.str()}, {"terms", terms}};
}

template <class T>
json series_json(const std::vector<T>& v) {
    json out = json::array();
    for (auto& x : v) {
        if constexpr (std::is_same_v<T, CycloScalar>) out.push_back(scalar_json(x));
        else if constexpr (std::is_same_v<T, Integer>) out.push_back(x.get_str());
        else out.push_back(x);
    }
    return out;
}

json poly_json(const Poly& p) { return series_json(p); }

// q accepted as "root:m" (primitive m-th root w_m) or a rational.
CycloScalar parse_q(const std::string& s) {
    if (s.rfind("root:", 0) == 0) {
        long m = std::stol(s.substr(5));
        if (m <= 0) throw std::invalid_argument("root order must be positive");
        return CycloScalar::root_of_unity(m, 1);
    }
    return CycloScalar(parse_rational(s));
}

// ---- shared options ----

struct Common {
    std::string algebra;  // quantum | qminus1 | commutative | jordan ("" = implied by the group)
    std::string q = "root:2";
    std::vector<std::string> group;  // kind followed by parameters
    long N = -1;
    std::string format = "json";
};

void add_common(CLI::App* sub, Common& c, bool with_group = true) {
    sub->add_option("--algebra", c.algebra, "quantum | qminus1 | commutative | jordan")
        ->check(CLI::IsMember({"quantum", "qminus1", "commutative", "jordan"}));
    sub->add_option("--q", c.q, "q for --algebra quantum: root:m or a rational");
    if (with_group) sub->add_option("--group", c.group, "trivial | cyclic n a | gnk n k | dihedral m q")->expected(1, 3);
    sub->add_option("--N", c.N, "degree bound");
    sub->add_option("--format", c.format, "json | text")->check(CLI::IsMember({"json", "text"}));
}

AlgebraSpec algebra_of(const std::string& name, const std::string& q) {
    if (name == "jordan") return AlgebraSpec::jordan();
    if (name == "qminus1") return AlgebraSpec::quantum(CycloScalar(-1));
    if (name == "commutative") return AlgebraSpec::quantum(CycloScalar(1));
    return AlgebraSpec::quantum(parse_q(q));
}

int int_param(const std::vector<std::string>& g, size_t i) {
    if (g.size() <= i) throw std::invalid_argument("--group " + g[0] + " needs " + std::to_string(i) + " parameters");
    size_t pos = 0;
    int v = std::stoi(g[i], &pos);
    if (pos != g[i].size()) throw std::invalid_argument("not an integer: '" + g[i] + "'");
    return v;
}

std::string algebra_label(const AlgebraSpec& A) {
    if (A.is_jordan()) return "jordan";
    if (A.is_commutative()) return "commutative";
    if (A.q_is_minus_one()) return "qminus1";
    return "quantum";
}

void warn_noncanonical(int n, int k) {
    if (n % 4 == 2 && k % 4 == 0)
        std::cerr << "warning: G_{" << n << "," << k << "} = G_{" << n / 2 << "," << k << "}; consider the canonical pair\n";
    if (std::gcd(n, k) > 2) std::cerr << "warning: gcd(" << n << "," << k << ") > 2, the group contains quasi-reflections\n";
}

GroupSpec group_of(const Common& c) {
    if (c.group.empty()) throw std::invalid_argument("--group is required");
    const std::string& kind = c.group[0];
    if (kind == "gnk") {
        if (!c.algebra.empty() && c.algebra != "qminus1") throw std::invalid_argument("G_{n,k} acts on --algebra qminus1");
        int n = int_param(c.group, 1), k = int_param(c.group, 2);
        warn_noncanonical(n, k);
        return GroupSpec::gnk(n, k);
    }
    if (kind == "dihedral") {
        if (!c.algebra.empty() && c.algebra != "commutative") throw std::invalid_argument("D_{m,q} acts on --algebra commutative");
        return GroupSpec::dihedral(int_param(c.group, 1), int_param(c.group, 2));
    }
    if (c.algebra.empty()) throw std::invalid_argument("--algebra is required for --group " + kind);
    AlgebraSpec A = algebra_of(c.algebra, c.q);
    if (kind == "trivial") return GroupSpec::trivial(A);
    if (kind == "cyclic") return GroupSpec::cyclic(A, int_param(c.group, 1), int_param(c.group, 2));
    throw std::invalid_argument("unknown group kind '" + kind + "'");
}

json context_json(const Common& c, const GroupSpec& G) {
    json g = json::array();
    for (auto& s : c.group) g.push_back(s);
    return {{"algebra", algebra_label(G.ambient())}, {"q", scalar_json(G.ambient().q())}, {"group", g}, {"group_name", G.str()}};
}

void emit(const json& payload, const std::string& format) {
    json out = {{"schema", 1}};
    for (auto& [k, v] : payload.items()) out[k] = v;
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return;
    }
    for (auto& [k, v] : out.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

// ---- presentations on the wire ----

json presentation_json(const Presentation& p) {
    json rels = json::array();
    for (auto& r : p.relations) {
        json terms = json::array();
        for (auto& [w, c] : r) terms.push_back({{"word", w}, {"c", scalar_json(c)}});
        rels.push_back({{"str", p.poly_str(r)}, {"terms", terms}});
    }
    return {{"names", p.names}, {"degrees", p.degrees}, {"relations", rels}};
}

Presentation presentation_from_json(const json& j) {
    Presentation p;
    p.names = j.at("names").get<std::vector<std::string>>();
    p.degrees = j.at("degrees").get<std::vector<int>>();
    for (auto& r : j.at("relations")) {
        FreePoly f;
        for (auto& t : r.at("terms")) f[t.at("word").get<FreeWord>()] += scalar_from_json(t.at("c"));
        p.relations.push_back(std::move(f));
    }
    p.validate();
    return p;
}

// ---- subcommands ----

json run_classify(const Common& c) {
    GroupSpec G = group_of(c);
    if (G.ambient().is_commutative())
        throw std::invalid_argument("classification assumes A is not commutative (q = 1 is excluded)");
    GroupReport r = group_report(G);
    json out = context_json(c, G);
    out["order"] = r.order;
    out["is_small"] = r.is_small;
    if (r.has_closed_form) out["is_small_closed_form"] = r.is_small_closed_form;
    out["hdet_trivial"] = r.hdet_trivial;
    out["gorenstein"] = r.gorenstein_flag;
    if (r.commutative_invariants_flag) out["commutative_invariants"] = *r.commutative_invariants_flag;
    return out;
}

json run_trace(const Common& c) {
    GroupSpec G = group_of(c);
    long N = c.N < 0 ? 10 : c.N;
    json elems = json::array();
    for (auto& g : enumerate_group(G)) {
        TraceResult t = trace(G.ambient(), g, N);
        json e = {{"element", g.str()}, {"series", series_json(t.series.coeffs)}};
        if (t.closed_form)
            e["closed_form"] = {{"numerator", poly_json(t.closed_form->numerator)}, {"denominator", poly_json(t.closed_form->denominator)},
                                {"str", t.closed_form->str()}};
        e["quasi_reflection"] = is_quasi_reflection(G.ambient(), g);
        e["hdet"] = scalar_json(hdet(G.ambient(), g));
        elems.push_back(e);
    }
    json out = context_json(c, G);
    out["N"] = N;
    out["elements"] = elems;
    return out;
}

json run_molien(const Common& c) {
    GroupSpec G = group_of(c);
    long N = c.N < 0 ? 20 : c.N;
    json out = context_json(c, G);
    out["N"] = N;
    out["coefficients"] = series_json(molien_dims(G.ambient(), G, N));
    return out;
}

json run_hj(long num, long den) {
    json out = {{"input", std::to_string(num) + "/" + std::to_string(den)}, {"expansion", hj_expand(num, den).entries}};
    // the same fraction read as n/(n-a), m/(m-q) and (n,k)
    long other = num - den;
    if (other > 0 && other < num) {
        try {
            TypeAData a = typeA_data(static_cast<int>(num), static_cast<int>(other));
            out["typeA"] = {{"n", a.n}, {"a", a.a}, {"d", a.d}, {"beta", a.beta}, {"i", a.i_series}, {"j", a.j_series}};
        } catch (const std::invalid_argument&) {
        }
        try {
            TypeDData d = typeD_data(static_cast<int>(num), static_cast<int>(other));
            out["typeD"] = {{"m", d.m}, {"q", d.q}, {"d", d.d}, {"alpha", d.alpha}, {"beta", d.beta},
                            {"s", d.s_series}, {"t", d.t_series}, {"r", d.r_series}};
        } catch (const std::invalid_argument&) {
        }
    }
    try {
        NCSeries s = nc_series(static_cast<int>(num), static_cast<int>(den));
        out["nc"] = {{"n", s.n}, {"k", s.k}, {"d", s.d}, {"branch", branch_name(s.branch)}, {"gamma", s.gamma}, {"beta", s.beta},
                     {"r", s.r_series}, {"s", s.s_series}, {"t", s.t_series}, {"indexing", s.indexing}};
    } catch (const std::invalid_argument&) {
    }
    return out;
}

json run_generators(const Common& c, long verify_N) {
    GroupSpec G = group_of(c);
    GeneratorSet gs = generator_set(G.ambient(), G);
    json out = context_json(c, G);
    out["provenance"] = provenance_name(gs.provenance);
    out["degrees"] = gs.degrees;
    json gens = json::array();
    for (auto& g : gs.generators) gens.push_back(elt_json(g));
    out["generators"] = gens;
    if (verify_N >= 0) {
        GenerationReport r = verify_generation(G.ambient(), G, gs.generators, verify_N);
        out["verification"] = {{"N", verify_N}, {"success", r.success}, {"first_failure", r.first_failure},
                               {"span_dims", r.span_dims}, {"molien_dims", r.molien_dims}};
    }
    return out;
}

struct PresentArgs {
    std::string family;  // jordan | quantum | gnk73
    int n = 0, a = 0;
};

json run_present(const PresentArgs& p, const std::string& q) {
    Presentation pres;
    json ctx;
    if (p.family == "jordan") {
        pres = jordan_presentation(p.n);
        ctx = {{"algebra", "jordan"}, {"group", json::array({"cyclic", std::to_string(p.n), "1"})}};
    } else if (p.family == "quantum") {
        CycloScalar qq = parse_q(q);
        pres = quantum_presentation(p.n, p.a, qq);
        ctx = {{"algebra", "quantum"}, {"q", q}, {"group", json::array({"cyclic", std::to_string(p.n), std::to_string(p.a)})}};
    } else if (p.family == "gnk73") {
        pres = gnk73_presentation();
        ctx = {{"algebra", "qminus1"}, {"group", json::array({"gnk", "7", "3"})}};
    } else {
        throw std::invalid_argument("unknown family '" + p.family + "'");
    }
    return {{"context", ctx}, {"presentation", presentation_json(pres)}};
}

json run_verify_pres(const std::string& input, long N) {
    json doc;
    if (input == "-") doc = json::parse(std::cin);
    else {
        std::ifstream f(input);
        if (!f) throw std::invalid_argument("cannot open " + input);
        doc = json::parse(f);
    }
    Common c;
    const json& ctx = doc.at("context");
    c.algebra = ctx.at("algebra").get<std::string>();
    if (ctx.contains("q")) c.q = ctx["q"].get<std::string>();
    c.group = ctx.at("group").get<std::vector<std::string>>();
    GroupSpec G = group_of(c);
    Presentation pres = presentation_from_json(doc.at("presentation"));
    if (N < 0) {
        int top = *std::max_element(pres.degrees.begin(), pres.degrees.end());
        N = std::max(4L * top, 24L);
    }
    PresentationReport r = verify_presentation(G.ambient(), G, pres, N);
    json out = context_json(c, G);
    out["N"] = N;
    out["success"] = r.success;
    out["first_failure"] = r.first_failure;
    out["relations_vanish"] = r.eval.all_zero;
    out["quotient_dims"] = r.quotient_dims;
    out["molien_dims"] = r.molien_dims;
    return out;
}

json run_auslander(const Common& c, long cap, bool exact, bool timing) {
    GroupSpec G = group_of(c);
    SmashContext ctx(G);
    long N = c.N;
    bool truncated = false;
    if (N < 0) {
        long n = 1, k = 1;
        if (auto cy = G.as_cyclic()) n = cy->n;
        if (auto g = G.as_gnk()) n = g->n, k = g->k;
        N = std::max(2 * (n - 1) + 4, 4 * n * k + 4);
        if (!G.as_cyclic() && !G.as_gnk()) N = 4L * ctx.order() + 4;
        if (N > cap) N = cap, truncated = true;
    }
    auto t0 = std::chrono::steady_clock::now();
    WitnessReport r = finite_dim_witness(ctx, static_cast<int>(N), exact ? RankMode::exact : RankMode::modular);
    json out = context_json(c, G);
    out["N"] = N;
    out["truncated"] = truncated;
    out["rank_mode"] = exact ? "exact" : "modular";
    if (!exact) out["prime"] = r.prime;
    out["required_tail"] = r.required_tail;
    out["witness"] = r.witness ? json(*r.witness) : json("not_found");
    json dims = json::array();
    for (auto& d : r.dims) dims.push_back({d.ideal_dim, d.ambient_dim});
    out["dims"] = dims;
    if (timing) out["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

json run_gnk_basis(int n, int k, int d) {
    json basis = json::array();
    for (auto& b : gnk_basis(n, k, d)) basis.push_back(elt_json(b));
    return {{"n", n}, {"k", k}, {"d", d}, {"dim", basis.size()}, {"basis", basis}};
}

json run_theta(int n, int k, long N) {
    ThetaReport r = theta_correspondence(n, k, N);
    json out = {{"n", n}, {"k", k}, {"N", r.N}, {"target", r.target.str()}, {"series_equal", r.series_equal},
                {"degrees_equal", r.degrees_equal}, {"source_degrees", r.source_degrees}, {"target_degrees", r.target_degrees},
                {"source_series", r.source_series}};
    if (!r.kleinian_series.empty()) out["kleinian_equal"] = r.kleinian_equal;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of finite groups acting on the quantum and Jordan planes"};
    app.require_subcommand(1);

    Common common;
    auto* classify = app.add_subcommand("classify", "order, smallness, hdet and Gorenstein flags");
    add_common(classify, common);
    auto* tr = app.add_subcommand("trace", "trace series of every group element");
    add_common(tr, common);
    auto* mol = app.add_subcommand("molien", "Hilbert series of the invariant ring");
    add_common(mol, common);

    long hj_num = 0, hj_den = 1;
    auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung expansion of num/den and the derived series");
    hj->add_option("num", hj_num)->required();
    hj->add_option("den", hj_den)->required();

    long verify_N = -1;
    auto* gens = app.add_subcommand("generators", "generators of the invariant ring");
    add_common(gens, common);
    gens->add_option("--verify", verify_N, "check generation through this degree");

    PresentArgs pa;
    std::string pres_q = "root:2";
    auto* present = app.add_subcommand("present", "emit a presentation as JSON");
    present->add_option("family", pa.family, "jordan | quantum | gnk73")->required();
    present->add_option("--n", pa.n);
    present->add_option("--a", pa.a);
    present->add_option("--q", pres_q, "root:m or a rational");

    std::string pres_input = "-";
    long pres_N = -1;
    auto* vpres = app.add_subcommand("verify-pres", "verify a presentation emitted by 'present'");
    vpres->add_option("input", pres_input, "file, or - for stdin");
    vpres->add_option("--N", pres_N);

    long cap = 200;
    bool exact = false, timing = false;
    auto* aus = app.add_subcommand("auslander", "finite-dimensionality witness for (A#G)/<gbar>");
    add_common(aus, common);
    aus->add_option("--cap", cap, "upper limit for the default N");
    aus->add_flag("--exact", exact, "exact ranks over Q(w) instead of modular ranks");
    aus->add_flag("--timing", timing, "include wall time (output is then not reproducible)");

    int bn = 0, bk = 0, bd = 0;
    auto* basis = app.add_subcommand("gnk-basis", "degree-d invariants of G_{n,k} from the triple formula");
    basis->add_option("n", bn)->required();
    basis->add_option("k", bk)->required();
    basis->add_option("d", bd)->required();

    int tn = 0, tk = 0;
    long tN = 40;
    auto* theta = app.add_subcommand("theta", "commutative model of a G_{n,k} invariant ring");
    theta->add_option("n", tn)->required();
    theta->add_option("k", tk)->required();
    theta->add_option("--N", tN);

    for (auto* sub : {hj, present, vpres, basis, theta})
        sub->add_option("--format", common.format, "json | text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        json out;
        std::string format = common.format;
        if (*classify) out = run_classify(common);
        else if (*tr) out = run_trace(common);
        else if (*mol) out = run_molien(common);
        else if (*hj) out = run_hj(hj_num, hj_den);
        else if (*gens) out = run_generators(common, verify_N);
        else if (*present) out = run_present(pa, pres_q);
        else if (*vpres) out = run_verify_pres(pres_input, pres_N);
        else if (*aus) out = run_auslander(common, cap, exact, timing);
        else if (*basis) out = run_gnk_basis(bn, bk, bd);
        else if (*theta) out = run_theta(tn, tk, tN);
        emit(out, format);
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
