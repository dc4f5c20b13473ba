// Command-line front end: parses JSON torus data, dispatches computations,
// emits deterministic JSON or table reports, and runs the self-test suite.
//
// Exit codes: 0 success, 1 internal/self-test failure, 2 schema violation
// (with a JSON pointer to the offending field), 3 unsupported request.

#include "bdtori/bdinv.hpp"
#include "bdtori/hecke.hpp"
#include "bdtori/json_io.hpp"
#include "bdtori/reps.hpp"
#include "bdtori/selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using bdtori::SchemaError;
using nlohmann::json;

json read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw SchemaError("/", "cannot open input file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("/", std::string("invalid JSON: ") + e.what());
    }
}

// Flat report rendering for --format table: one sorted "key = value" line per
// top-level field, nested values serialized compactly.
void emit(const json& report, const std::string& format) {
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : report.items())
        std::cout << key << " = " << value.dump() << "\n";
}

bdtori::LocalFieldSpec field_from_flat(const json& j, const mpz_class& n) {
    bdtori::LocalFieldSpec f;
    if (!j.contains("q")) throw SchemaError("/q", "missing required field");
    f.q = bdtori::parse_int(j["q"], "/q");
    f.n = n;
    try {
        f.validate();
    } catch (const std::invalid_argument& e) {
        throw SchemaError("/q", e.what());
    }
    return f;
}

bdtori::CoverSpec cover_from_input(const json& j, const bdtori::SymbolOptions& symbol) {
    bdtori::CoverSpec spec;
    spec.datum = bdtori::parse_datum(j);
    spec.field = field_from_flat(j, spec.datum.n);
    spec.symbol = symbol;
    return spec;
}

json mun_json(const bdtori::MuN& z) { return json{{"zeta_exponent", bdtori::to_long(z.exponent)}}; }

int cmd_invariants(const json& in, const std::string& format) {
    bdtori::BDDatum d = bdtori::parse_datum(in);
    bdtori::SharpData s = bdtori::sharp_lattices(d);
    bdtori::FiniteInvariants f = bdtori::finite_invariants(d);
    bdtori::XqnResult x = bdtori::xqn_isomorphism(d);
    bdtori::RGroupData r = bdtori::r_group(d);
    json report{
        {"Ysharp", bdtori::matrix_to_json(s.Ysharp.basis())},
        {"Xsharp_scaled", bdtori::matrix_to_json(s.Xsharp_scaled.basis())},
        {"B", bdtori::matrix_to_json(s.B)},
        {"mu", bdtori::factors_to_json(f.mu)},
        {"nu", bdtori::factors_to_json(f.nu)},
        {"nu_hat", bdtori::factors_to_json(f.nu_hat)},
        {"t_n", bdtori::factors_to_json(f.t_n)},
        {"t_hat_n", bdtori::factors_to_json(f.t_hat_n)},
        {"xqn_domain", bdtori::factors_to_json(x.domain)},
        {"xqn_codomain", bdtori::factors_to_json(x.codomain)},
        {"r_component_group", bdtori::factors_to_json(r.component_group)},
        {"is_sharp", bdtori::is_sharp(d)},
        {"zind", bdtori::to_long(bdtori::zind_lattice(d))},
        {"cind_bound", bdtori::to_long(bdtori::cind_bound(d))},
    };
    emit(report, format);
    return 0;
}

int cmd_center(const json& in, const std::string& format, const bdtori::SymbolOptions& symbol) {
    bdtori::CoverSpec spec = cover_from_input(in, symbol);
    spec.require_split();
    bdtori::CenterData cd = bdtori::center(spec);
    json gram = json::array();
    for (const auto& row : cd.pairing.gram) {
        json jr = json::array();
        for (const auto& v : row) jr.push_back(bdtori::qmodz_to_json(v));
        gram.push_back(std::move(jr));
    }
    json report{
        {"zdag", bdtori::matrix_to_json(cd.zdag.basis())},
        {"core", bdtori::matrix_to_json(cd.core.basis())},
        {"quotient", bdtori::factors_to_json(cd.quotient)},
        {"pairing_gram", std::move(gram)},
        {"zind", bdtori::to_long(cd.zind)},
        {"cind", bdtori::to_long(cd.cind)},
    };
    emit(report, format);
    return 0;
}

int cmd_hilbert(const json& in, const std::string& format, const bdtori::SymbolOptions& symbol) {
    bdtori::LocalFieldSpec f = bdtori::parse_field(in);
    if (!in.contains("a")) throw SchemaError("/a", "missing required field");
    if (!in.contains("b")) throw SchemaError("/b", "missing required field");
    bdtori::TameElement a = bdtori::parse_tame(in["a"], f, "/a");
    bdtori::TameElement b = bdtori::parse_tame(in["b"], f, "/b");
    emit(mun_json(bdtori::hilbert(f, a, b, symbol)), format);
    return 0;
}

int cmd_hecke_table(const json& in, const std::string& format,
                    const bdtori::SymbolOptions& symbol, long bound) {
    bdtori::CoverSpec spec = cover_from_input(in, symbol);
    spec.require_split();
    bdtori::HeckeSpec hs = bdtori::HeckeSpec::standard(spec);
    json entries = json::array();
    auto pts = bdtori::lambda_box(hs, bound);
    for (const auto& y1 : pts)
        for (const auto& y2 : pts)
            entries.push_back(json{{"y1", bdtori::vector_to_json(y1)},
                                   {"y2", bdtori::vector_to_json(y2)},
                                   {"zeta_exponent",
                                    bdtori::to_long(cocycle_closed(hs, y1, y2).exponent)}});
    json report{{"lambda", bdtori::matrix_to_json(hs.lambda.basis())},
                {"bound", bound},
                {"entries", std::move(entries)}};
    emit(report, format);
    return 0;
}

int cmd_irrep(const json& in, const std::string& format, const bdtori::SymbolOptions& symbol,
              long chi_index) {
    bdtori::CoverSpec spec = cover_from_input(in, symbol);
    spec.require_split();
    bdtori::FiniteCover G(spec);
    auto chars = bdtori::enumerate_genuine_central_characters(G, true);
    if (chi_index < 0 || static_cast<std::size_t>(chi_index) >= chars.size())
        throw SchemaError("/chi", "character index out of range (have " +
                                      std::to_string(chars.size()) +
                                      " unramified genuine central characters)");
    bdtori::GenuineIrrep pi = bdtori::build_irrep(spec, chars[chi_index]);

    auto elt_json = [](const bdtori::FiniteCover::Elt& e) {
        return json{{"g", bdtori::vector_to_json(e.g)}, {"z", bdtori::to_long(e.z)}};
    };
    json reps = json::array();
    for (const auto& e : pi.coset_reps()) reps.push_back(elt_json(e));

    json gens = json::array();
    for (std::size_t i = 0; i < 2 * G.rank(); ++i) {
        std::vector<mpz_class> g(2 * G.rank(), 0);
        g[i] = 1;
        bdtori::MonomialMatrix m = pi.act(G.make(g, 0));
        json perm = json::array(), scal = json::array();
        for (std::size_t j = 0; j < m.perm.size(); ++j) {
            perm.push_back(m.perm[j]);
            scal.push_back(bdtori::qmodz_to_json(m.scalar[j]));
        }
        gens.push_back(json{{"generator", bdtori::vector_to_json(g)},
                            {"perm", std::move(perm)},
                            {"scalars", std::move(scal)}});
    }

    // Character table on the center, where the trace is a scaled root of
    // unity determined by the central character.
    json central = json::array();
    for (const auto& [e, v] : pi.central_char().table())
        central.push_back(json{{"element", elt_json(e)}, {"value", bdtori::qmodz_to_json(v)}});

    json report{{"dimension", bdtori::to_long(pi.dimension())},
                {"chi_index", chi_index},
                {"num_unramified_characters", chars.size()},
                {"coset_reps", std::move(reps)},
                {"generators", std::move(gens)},
                {"central_character", std::move(central)},
                {"spherical_fixed_dim", bdtori::to_long(bdtori::spherical_fixed_dim(pi))}};
    emit(report, format);
    return 0;
}

int cmd_mult_bound(const json& in, const std::string& format) {
    bdtori::GlobalBoundInput input = bdtori::parse_global_bound(in);
    emit(json{{"bound", bdtori::to_long(bdtori::global_multiplicity_bound(input))}}, format);
    return 0;
}

int cmd_selftest(const std::string& format, const std::string& grid,
                 const bdtori::SymbolOptions& symbol) {
    if (grid == "none") {
        std::cerr << "warning: empty grid override; no properties were checked\n";
        emit(json{{"properties", json::array()}, {"passed", true}}, format);
        return 0;
    }
    bdtori::SelftestOptions opts;
    opts.full_grid = (grid == "full");
    opts.symbol = symbol;
    auto results = bdtori::run_selftest(opts);
    bool all = true;
    json props = json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        props.push_back(json{{"name", r.name},
                             {"passed", r.passed},
                             {"cases", r.cases},
                             {"witness", r.witness}});
        if (format == "table")
            std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.cases
                      << " cases)" << (r.passed ? "" : "  witness: " + r.witness) << "\n";
    }
    if (format == "json") emit(json{{"properties", std::move(props)}, {"passed", all}}, "json");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants, centers, Hecke algebras and genuine representations "
                 "of degree-n covers of tori over tame local fields"};
    app.require_subcommand(1);

    std::string input = "-", format = "json", convention = "inverse", grid = "full";
    long bound = 2, chi_index = 0;
    bool mutate = false;

    auto add_common = [&](CLI::App* sub, bool wants_input) {
        if (wants_input) sub->add_option("--input", input, "input JSON file, or - for stdin");
        sub->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--symbol-convention", convention)
            ->check(CLI::IsMember({"standard", "inverse"}));
        sub->add_flag("--mutate-hilbert", mutate)->group("");  // hidden: self-test mutation knob
        return sub;
    };

    auto* c_inv = add_common(app.add_subcommand("invariants", "lattice-level datum invariants"),
                             true);
    auto* c_center = add_common(app.add_subcommand("center", "center of a split cover"), true);
    auto* c_hecke = add_common(
        app.add_subcommand("hecke-table", "spherical Hecke structure constants"), true);
    c_hecke->add_option("--bound", bound, "coordinate box bound for the table");
    auto* c_irrep = add_common(
        app.add_subcommand("irrep", "induced genuine irreducible representation"), true);
    c_irrep->add_option("--chi", chi_index,
                        "index into the canonical list of unramified genuine central characters");
    auto* c_hilb = add_common(app.add_subcommand("hilbert", "degree-n tame Hilbert symbol"), true);
    auto* c_mult = add_common(
        app.add_subcommand("mult-bound", "global multiplicity bound evaluator"), true);
    auto* c_self = add_common(app.add_subcommand("selftest", "run the property-test suite"),
                              false);
    c_self->add_option("--grid", grid)->check(CLI::IsMember({"small", "full", "none"}));

    CLI11_PARSE(app, argc, argv);

    bdtori::SymbolOptions symbol;
    symbol.convention = convention == "standard" ? bdtori::SymbolConvention::standard
                                                 : bdtori::SymbolConvention::inverse;
    symbol.mutate_vv_sign = mutate;

    try {
        if (c_self->parsed()) return cmd_selftest(format, grid, symbol);
        json in = read_input(input);
        if (c_inv->parsed()) return cmd_invariants(in, format);
        if (c_center->parsed()) return cmd_center(in, format, symbol);
        if (c_hecke->parsed()) return cmd_hecke_table(in, format, symbol, bound);
        if (c_irrep->parsed()) return cmd_irrep(in, format, symbol, chi_index);
        if (c_hilb->parsed()) return cmd_hilbert(in, format, symbol);
        if (c_mult->parsed()) return cmd_mult_bound(in, format);
    } catch (const SchemaError& e) {
        std::cerr << "schema error at " << e.pointer << ": " << e.what() << "\n";
        return 2;
    } catch (const bdtori::UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
