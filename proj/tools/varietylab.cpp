// varietylab: algebras over finite fields given by structure constants.
// Subcommands: info, series, identities, free, construct, census,
// theorem-suite. Reports are JSON on stdout (--human for plain text);
// exit code 0 = success, 1 = domain error, 2 = a size cap was exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "varietylab/algebra_core.hpp"
#include "varietylab/birkhoff_free.hpp"
#include "varietylab/census.hpp"
#include "varietylab/constructions.hpp"
#include "varietylab/error.hpp"
#include "varietylab/json_io.hpp"
#include "varietylab/morphisms.hpp"
#include "varietylab/poly_lang.hpp"
#include "varietylab/theorem_suite.hpp"

using nlohmann::ordered_json;

namespace {

constexpr const char *kVersion = "1.0.0";

bool g_human = false;

std::string scalar_text(const ordered_json &v) {
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

void render_human(std::ostream &os, const ordered_json &j,
                  const std::string &indent) {
    if (j.is_object()) {
        for (const auto &item : j.items()) {
            const ordered_json &v = item.value();
            if (!v.is_object() && !v.is_array()) {
                os << indent << item.key() << ": " << scalar_text(v) << "\n";
            } else if (v.is_array() &&
                       std::all_of(v.begin(), v.end(), [](const ordered_json &e) {
                           return !e.is_object() && !e.is_array();
                       })) {
                os << indent << item.key() << ": " << v.dump() << "\n";
            } else {
                os << indent << item.key() << ":\n";
                render_human(os, v, indent + "  ");
            }
        }
    } else if (j.is_array()) {
        for (const ordered_json &e : j) {
            if (!e.is_object() && !e.is_array()) {
                os << indent << "- " << scalar_text(e) << "\n";
            } else {
                os << indent << "-\n";
                render_human(os, e, indent + "  ");
            }
        }
    } else {
        os << indent << scalar_text(j) << "\n";
    }
}

void emit(const std::string &command, ordered_json payload) {
    if (g_human) {
        std::cout << "varietylab " << kVersion << " " << command << "\n";
        render_human(std::cout, payload, "");
        return;
    }
    ordered_json out;
    out["tool"] = "varietylab";
    out["version"] = kVersion;
    out["command"] = command;
    for (auto &item : payload.items())
        out[item.key()] = std::move(item.value());
    std::cout << out.dump(2) << "\n";
}

ordered_json optional_size(const std::optional<std::size_t> &v) {
    if (v)
        return *v;
    return nullptr;
}

ordered_json algebra_json(const vlab::Algebra &A) {
    return ordered_json::parse(vlab::algebra_to_json_text(A));
}

// Either embeds the algebra in the report or writes it to `out`.
void attach_algebra(ordered_json &payload, const vlab::Algebra &A,
                    const std::string &out) {
    if (out.empty()) {
        payload["algebra"] = algebra_json(A);
    } else {
        vlab::save_algebra_file(A, out);
        payload["written"] = out;
    }
}

std::string tensor_digits(const std::vector<vlab::fel> &t) {
    std::string s;
    s.reserve(t.size());
    for (vlab::fel x : t)
        s.push_back(char('0' + x));
    return s;
}

void cmd_info(const std::string &file) {
    vlab::Algebra A = vlab::load_algebra_file(file);
    ordered_json payload;
    payload["dim"] = A.m;
    payload["q"] = A.F.q();
    payload["simple"] = vlab::is_simple(A);
    payload["minimal"] = vlab::is_minimal_algebra(A);
    payload["aut_order"] = vlab::automorphism_group(A).order;
    payload["rigid"] = vlab::automorphism_group(A).order == 1;
    payload["cyclic"] = vlab::is_one_generated(A);
    payload["commutative"] = vlab::is_commutative(A);
    payload["nilpotent"] = vlab::is_nilpotent(A);
    payload["solvable"] = vlab::is_solvable(A);
    emit("info", std::move(payload));
}

void cmd_series(const std::string &file) {
    vlab::Algebra A = vlab::load_algebra_file(file);
    ordered_json payload;
    payload["class"] = optional_size(vlab::nilpotency_class(A));
    payload["depth"] = optional_size(vlab::nilpotent_depth(A));
    payload["solvable_length"] = optional_size(vlab::solvable_length(A));
    payload["socle_height"] = vlab::socle_height(A);
    emit("series", std::move(payload));
}

void cmd_identities(const std::string &file,
                    const std::vector<std::string> &inline_polys,
                    const std::vector<std::string> &poly_files,
                    const std::string &family, std::size_t param) {
    vlab::Algebra A = vlab::load_algebra_file(file);
    std::vector<vlab::NAPoly> polys;
    for (const std::string &text : inline_polys)
        polys.push_back(vlab::parse_poly(A.F, text));
    for (const std::string &pf : poly_files) {
        std::ifstream in(pf);
        if (!in)
            throw vlab::error("cannot open polynomial file: " + pf);
        std::string line;
        while (std::getline(in, line)) {
            std::size_t hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            polys.push_back(vlab::parse_poly(A.F, line));
        }
    }
    if (!family.empty()) {
        vlab::IdentityFamily kind;
        if (family == "nilpotent_class")
            kind = vlab::IdentityFamily::nilpotent_class;
        else if (family == "nilpotent_depth")
            kind = vlab::IdentityFamily::nilpotent_depth;
        else if (family == "solvable")
            kind = vlab::IdentityFamily::solvable;
        else
            throw vlab::error("unknown identity family: " + family);
        for (vlab::NAPoly &p : vlab::identity_family(kind, param))
            polys.push_back(std::move(p));
    }
    if (polys.empty())
        throw vlab::error("no polynomials given (use --poly, --file or "
                          "--family)");
    ordered_json rows = ordered_json::array();
    bool all = true;
    for (const vlab::NAPoly &p : polys) {
        bool holds = vlab::is_identity(A, p);
        all = all && holds;
        rows.push_back({{"poly", vlab::poly_to_string(p)}, {"identity", holds}});
    }
    ordered_json payload;
    payload["polynomials"] = std::move(rows);
    payload["all_hold"] = all;
    emit("identities", std::move(payload));
}

void cmd_free(const std::string &file, std::size_t rank, bool decompose,
              std::size_t table) {
    vlab::Algebra A = vlab::load_algebra_file(file);
    vlab::FreeAlgebraRep F = vlab::free_algebra(A, rank);
    ordered_json payload;
    payload["rank"] = rank;
    payload["dim"] = F.dim();
    payload["bound"] = F.ambient.dim;
    payload["max_witness_degree"] = F.max_witness_degree;
    ordered_json exprs = ordered_json::array();
    for (const vlab::MonPtr &m : F.expressions)
        exprs.push_back(vlab::mon_to_string(m));
    payload["expressions"] = std::move(exprs);
    ordered_json rels = ordered_json::array();
    for (const vlab::NAPoly &p : F.relations)
        rels.push_back(vlab::poly_to_string(p));
    payload["relations"] = std::move(rels);
    if (table > 0) {
        vlab::DimensionTable T = vlab::dimension_table(A, table);
        ordered_json tj;
        tj["d"] = T.d;
        tj["b"] = T.b;
        tj["d_k"] = T.d_k;
        tj["roots"] = T.roots;
        payload["table"] = std::move(tj);
    }
    if (decompose) {
        std::vector<vlab::Subspace> parts = vlab::decompose_free_minimal(F);
        ordered_json sj;
        sj["count"] = parts.size();
        ordered_json dims = ordered_json::array();
        for (const vlab::Subspace &S : parts)
            dims.push_back(S.dim());
        sj["dims"] = std::move(dims);
        payload["summands"] = std::move(sj);
    }
    emit("free", std::move(payload));
}

std::vector<vlab::Vec> parse_vector_rows(const vlab::Algebra &A,
                                         const std::string &text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::exception &e) {
        throw vlab::error(std::string("invalid vector list: ") + e.what());
    }
    if (!j.is_array())
        throw vlab::error("vector list must be a JSON array of rows");
    std::vector<vlab::Vec> rows;
    for (const ordered_json &r : j) {
        if (!r.is_array() || r.size() != A.m)
            throw vlab::error("each row must have one entry per basis vector");
        vlab::Vec v;
        for (const ordered_json &x : r) {
            long long e = x.get<long long>();
            if (e < 0 || e >= A.F.q())
                throw vlab::error("vector entries must lie in 0..q-1");
            v.push_back(vlab::fel(e));
        }
        rows.push_back(std::move(v));
    }
    return rows;
}

void cmd_construct_semidirect(const std::string &file,
                              const std::string &ideal_text,
                              const std::string &out) {
    vlab::Algebra C = vlab::load_algebra_file(file);
    vlab::Subspace I = vlab::subspace_from_rows(
        C.F, C.m, parse_vector_rows(C, ideal_text));
    vlab::SemidirectData sd = vlab::semidirect_sum(C, I);
    ordered_json payload;
    payload["base_dim"] = sd.base.m;
    payload["ideal_dim"] = sd.ideal.dim();
    payload["dim"] = sd.result.m;
    payload["certified"] = true;
    attach_algebra(payload, sd.result, out);
    emit("construct semidirect", std::move(payload));
}

void cmd_construct_freeproduct(const std::string &file, std::size_t k,
                               std::size_t l, const std::string &out) {
    vlab::Algebra A = vlab::load_algebra_file(file);
    vlab::FreeProductData fp = vlab::free_product_powers(A, k, l);
    ordered_json payload;
    payload["k"] = k;
    payload["l"] = l;
    payload["dim"] = fp.product.m;
    payload["left_dim"] = fp.left_power.m;
    payload["right_dim"] = fp.right_power.m;
    attach_algebra(payload, fp.product, out);
    emit("construct freeproduct", std::move(payload));
}

void cmd_construct_envelope(const std::string &file, const std::string &kind,
                            const std::string &out) {
    vlab::Algebra A = vlab::load_algebra_file(file);
    vlab::EnvelopeKind ek;
    if (kind == "left")
        ek = vlab::EnvelopeKind::left;
    else if (kind == "right")
        ek = vlab::EnvelopeKind::right;
    else if (kind == "two-sided")
        ek = vlab::EnvelopeKind::two_sided;
    else
        throw vlab::error("unknown envelope kind: " + kind);
    vlab::EnvelopingAlgebra env = vlab::enveloping(A, ek);
    ordered_json payload;
    payload["kind"] = kind;
    payload["dim"] = env.alg.m;
    attach_algebra(payload, env.alg, out);
    emit("construct envelope", std::move(payload));
}

void cmd_construct_zero(std::size_t dim, int q, const std::string &out) {
    vlab::Algebra Z = vlab::zero_algebra(vlab::Field(q), dim);
    ordered_json payload;
    payload["dim"] = dim;
    payload["q"] = q;
    attach_algebra(payload, Z, out);
    emit("construct zero", std::move(payload));
}

void cmd_census(std::size_t m, int q, std::size_t shards, bool force,
                const std::string &csv) {
    vlab::CensusReport r = vlab::enumerate_algebras(m, q, shards, force);
    ordered_json payload;
    payload["m"] = r.m;
    payload["q"] = r.q;
    payload["tensor_total"] = r.tensor_total;
    payload["gl_order"] = r.gl;
    payload["gl_defect"] = vlab::gl_order(r.m, r.q).defect;
    payload["phi"] = r.phi;
    payload["orbit_size_sum"] = r.orbit_size_sum;
    ordered_json counts;
    counts["simple"] = r.n_simple;
    counts["rigid"] = r.n_rigid;
    counts["cyclic"] = r.n_cyclic;
    counts["nilpotent"] = r.n_nilpotent;
    counts["solvable"] = r.n_solvable;
    counts["minimal"] = r.n_minimal;
    counts["no_proper_subalg_dim_gt_1"] = r.n_no_proper_subalg_dim_gt_1;
    counts["inherently_semisimple"] = r.n_inherently_semisimple;
    payload["counts"] = std::move(counts);
    ordered_json fractions = ordered_json::array();
    for (const vlab::PropertyFraction &row : vlab::property_fractions(r))
        fractions.push_back({{"name", row.name},
                             {"count", row.count},
                             {"fraction", row.fraction}});
    payload["fractions"] = std::move(fractions);
    ordered_json classes = ordered_json::array();
    for (const vlab::CensusClass &c : r.classes) {
        ordered_json cj;
        cj["tensor"] = tensor_digits(c.tensor);
        cj["orbit_size"] = c.orbit_size;
        cj["aut_order"] = c.aut_order;
        cj["simple"] = c.simple;
        cj["rigid"] = c.rigid;
        cj["cyclic"] = c.cyclic;
        cj["nilpotent"] = c.nilpotent;
        cj["solvable"] = c.solvable;
        cj["minimal"] = c.minimal;
        cj["no_proper_subalg_dim_gt_1"] = c.no_proper_subalg_dim_gt_1;
        cj["inherently_semisimple"] = c.inherently_semisimple;
        classes.push_back(std::move(cj));
    }
    payload["classes"] = std::move(classes);
    if (!csv.empty()) {
        std::ofstream os(csv);
        if (!os)
            throw vlab::error("cannot write CSV file: " + csv);
        os << "tensor,orbit_size,aut_order,simple,rigid,cyclic,nilpotent,"
              "solvable,minimal,no_proper_subalg_dim_gt_1,"
              "inherently_semisimple\n";
        for (const vlab::CensusClass &c : r.classes)
            os << tensor_digits(c.tensor) << ',' << c.orbit_size << ','
               << c.aut_order << ',' << c.simple << ',' << c.rigid << ','
               << c.cyclic << ',' << c.nilpotent << ',' << c.solvable << ','
               << c.minimal << ',' << c.no_proper_subalg_dim_gt_1 << ','
               << c.inherently_semisimple << '\n';
        payload["csv_written"] = csv;
    }
    emit("census", std::move(payload));
}

int cmd_theorem_suite(std::uint64_t seed) {
    std::vector<vlab::SuiteCheck> checks = vlab::run_theorem_suite(seed);
    std::size_t failed = 0;
    for (const vlab::SuiteCheck &c : checks)
        failed += !c.pass;
    if (g_human) {
        for (const vlab::SuiteCheck &c : checks)
            std::cout << vlab::format_suite_line(c) << "\n";
        std::cout << (checks.size() - failed) << "/" << checks.size()
                  << " checks passed\n";
    } else {
        ordered_json rows = ordered_json::array();
        for (const vlab::SuiteCheck &c : checks)
            rows.push_back({{"name", c.name},
                            {"pass", c.pass},
                            {"detail", c.detail}});
        ordered_json payload;
        payload["seed"] = seed;
        payload["checks"] = std::move(rows);
        payload["passed"] = checks.size() - failed;
        payload["failed"] = failed;
        emit("theorem-suite", std::move(payload));
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"algebras over finite fields: structural series, free "
                 "algebras, constructions, identities and census"};
    app.set_version_flag("--version", kVersion);
    app.add_flag("--human", g_human, "plain-text report instead of JSON");
    app.require_subcommand(1);
    // Lets the global --human appear after the subcommand too.
    app.fallthrough();

    std::string info_file;
    CLI::App *info = app.add_subcommand("info", "basic invariants of one algebra");
    info->add_option("file", info_file, "algebra JSON file")->required();

    std::string series_file;
    CLI::App *series =
        app.add_subcommand("series", "nilpotency/solvability/socle series data");
    series->add_option("file", series_file, "algebra JSON file")->required();

    std::string id_file, id_family;
    std::vector<std::string> id_polys, id_poly_files;
    std::size_t id_param = 1;
    CLI::App *ident =
        app.add_subcommand("identities", "check polynomial identities");
    ident->add_option("file", id_file, "algebra JSON file")->required();
    ident->add_option("--poly", id_polys, "polynomial text (repeatable)");
    ident->add_option("--poly-file", id_poly_files,
                      "file of polynomials, one per line, '#' comments");
    ident->add_option("--family", id_family,
                      "nilpotent_class | nilpotent_depth | solvable");
    ident->add_option("--param", id_param, "family parameter");

    std::string free_file;
    std::size_t free_rank = 1, free_table = 0;
    bool free_decompose = false;
    CLI::App *freecmd =
        app.add_subcommand("free", "relatively free algebra of a variety");
    freecmd->add_option("--algebra", free_file, "generator algebra JSON file")
        ->required();
    freecmd->add_option("--rank", free_rank, "number of free generators")
        ->required();
    freecmd->add_flag("--decompose", free_decompose,
                      "split into minimal-ideal summands");
    freecmd->add_option("--table", free_table,
                        "also compute dimensions for ranks 1..N");

    CLI::App *construct =
        app.add_subcommand("construct", "build derived algebras");
    construct->require_subcommand(1);
    std::string sd_file, sd_ideal, sd_out;
    CLI::App *semidirect = construct->add_subcommand(
        "semidirect", "semidirect sum over an abelian ideal");
    semidirect->add_option("--algebra", sd_file, "base algebra JSON file")
        ->required();
    semidirect
        ->add_option("--ideal", sd_ideal,
                     "JSON rows spanning an abelian ideal, e.g. [[0,1]]")
        ->required();
    semidirect->add_option("--out", sd_out, "write the sum to this file");

    std::string fp_file, fp_out;
    std::size_t fp_k = 1, fp_l = 1;
    CLI::App *freeproduct = construct->add_subcommand(
        "freeproduct", "free product of two powers of a rigid simple "
                       "minimal algebra");
    freeproduct->add_option("--algebra", fp_file, "generator algebra JSON file")
        ->required();
    freeproduct->add_option("-k,--left", fp_k, "left power")->required();
    freeproduct->add_option("-l,--right", fp_l, "right power")->required();
    freeproduct->add_option("--out", fp_out, "write the product to this file");

    std::string env_file, env_kind = "two-sided", env_out;
    CLI::App *envelope = construct->add_subcommand(
        "envelope", "associative algebra of multiplication operators");
    envelope->add_option("--algebra", env_file, "algebra JSON file")->required();
    envelope->add_option("--kind", env_kind, "left | right | two-sided");
    envelope->add_option("--out", env_out, "write the envelope to this file");

    std::size_t zero_dim = 0;
    int zero_q = 2;
    std::string zero_out;
    CLI::App *zero = construct->add_subcommand(
        "zero", "zero-multiplication algebra of a given dimension");
    zero->add_option("--dim", zero_dim, "dimension")->required();
    zero->add_option("--q", zero_q, "field size");
    zero->add_option("--out", zero_out, "write the algebra to this file");

    std::size_t census_m = 2, census_shards = 1;
    int census_q = 2;
    bool census_force = false;
    std::string census_csv;
    CLI::App *census =
        app.add_subcommand("census", "all algebras of a dimension up to "
                                     "isomorphism");
    census->add_option("--dim", census_m, "dimension")->required();
    census->add_option("--q", census_q, "field size")->required();
    census->add_option("--shards", census_shards, "parallel shard count");
    census->add_flag("--force", census_force,
                     "allow the long 3-dimensional run");
    census->add_option("--csv", census_csv,
                       "also write one CSV row per class");

    std::uint64_t suite_seed = 12345;
    CLI::App *suite = app.add_subcommand(
        "theorem-suite", "replay every acceptance check with PASS/FAIL lines");
    suite->add_option("--seed", suite_seed,
                      "seed for the randomized sampling steps");

    try {
        app.parse(argc, argv);
        if (*info)
            cmd_info(info_file);
        else if (*series)
            cmd_series(series_file);
        else if (*ident)
            cmd_identities(id_file, id_polys, id_poly_files, id_family,
                           id_param);
        else if (*freecmd)
            cmd_free(free_file, free_rank, free_decompose, free_table);
        else if (*semidirect)
            cmd_construct_semidirect(sd_file, sd_ideal, sd_out);
        else if (*freeproduct)
            cmd_construct_freeproduct(fp_file, fp_k, fp_l, fp_out);
        else if (*envelope)
            cmd_construct_envelope(env_file, env_kind, env_out);
        else if (*zero)
            cmd_construct_zero(zero_dim, zero_q, zero_out);
        else if (*census)
            cmd_census(census_m, census_q, census_shards, census_force,
                       census_csv);
        else if (*suite)
            return cmd_theorem_suite(suite_seed);
        return 0;
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const vlab::cap_exceeded &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
