#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cg3/json_io.hpp"
#include "cg3/parallel.hpp"

namespace {

using cg3::Json;

void emit(const Json& doc) { std::printf("%s\n", doc.dump().c_str()); }

int emit_error(const std::string& type, const std::string& message) {
    std::fprintf(stderr, "[cg3] error: %s\n", message.c_str());
    emit(Json{{"error", Json{{"type", type}, {"message", message}}}});
    return 2;
}

cg3::Weight parse_weight(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected a weight of the form a,b: " + text);
    std::size_t na = 0, nb = 0;
    const long long a = std::stoll(text.substr(0, comma), &na);
    const long long b = std::stoll(text.substr(comma + 1), &nb);
    if (na != comma || nb != text.size() - comma - 1)
        throw std::invalid_argument("expected a weight of the form a,b: " + text);
    const cg3::Weight w{a, b};
    cg3::require_valid(w);
    return w;
}

int run_decompose(const std::vector<std::string>& reps) {
    const auto w1 = parse_weight(reps.at(0));
    const auto w2 = parse_weight(reps.at(1));
    emit(cg3::json_of_decomposition(cg3::decompose(w1, w2)));
    return 0;
}

int run_homspace(const std::vector<std::string>& srcs, const std::string& dst) {
    const auto w1 = parse_weight(srcs.at(0));
    const auto w2 = parse_weight(srcs.at(1));
    const auto target = parse_weight(dst);
    const auto hs = cg3::hom_space(w1, w2, target);
    if (!hs) {
        emit(Json{{"s", nullptr}, {"t", nullptr}, {"J", Json::array()}, {"mult", 0}});
        return 0;
    }
    emit(cg3::json_of(*hs));
    return 0;
}

int run_matrix(const std::vector<std::string>& srcs, const std::string& dst, long long j,
               const std::string& out_path) {
    const auto w1 = parse_weight(srcs.at(0));
    const auto w2 = parse_weight(srcs.at(1));
    const auto target_w = parse_weight(dst);
    const auto hs = cg3::hom_space(w1, w2, target_w);
    if (!hs || hs->J.empty())
        throw std::invalid_argument("matrix: target does not occur in the tensor product");
    const cg3::CGMapSpec ms{*hs, cg3::detail::resolve_index_j(*hs, j)};

    const auto kb1 = cg3::kernel_basis(w1);
    const auto kb2 = cg3::kernel_basis(w2);
    const cg3::MultiDegree dst_md{{cg3::SlotKind::S, static_cast<int>(target_w.a)},
                                  {cg3::SlotKind::D, static_cast<int>(target_w.b)}};
    const auto target = cg3::monomial_basis(dst_md);
    const cg3::Rational one(1);

    cg3::SparseMatrix<cg3::Rational> m;
    m.rows = target.size();
    m.cols = kb1.dim() * kb2.dim();
    for (const auto& mono : target) m.row_labels.push_back(cg3::monomial_label(mono, dst_md));
    for (std::size_t i = 0; i < kb1.dim(); ++i)
        for (std::size_t k = 0; k < kb2.dim(); ++k)
            m.col_labels.push_back("u" + std::to_string(i) + "*v" + std::to_string(k));

    std::vector<std::vector<std::tuple<std::size_t, std::size_t, cg3::Rational>>> cols(m.cols);
    cg3::parallel_for(m.cols, [&](std::size_t col) {
        const std::size_t i = col / kb2.dim();
        const std::size_t k = col % kb2.dim();
        const auto img =
            cg3::cg_basis_map(ms, cg3::tensor_product(kb1.vectors[i], kb2.vectors[k]));
        const auto coords = cg3::ambient_coords(img, target, one);
        for (std::size_t r = 0; r < coords.size(); ++r)
            if (!coords[r].is_zero()) cols[col].emplace_back(r, col, coords[r]);
    });
    for (auto& chunk : cols)
        for (auto& e : chunk) m.entries.push_back(std::move(e));
    m.sort_entries();

    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("matrix: cannot open output file " + out_path);
    out << cg3::json_of(m).dump() << "\n";
    if (!out) throw std::invalid_argument("matrix: failed writing " + out_path);

    emit(Json{{"src1", cg3::json_of(w1)},
              {"src2", cg3::json_of(w2)},
              {"dst", cg3::json_of(target_w)},
              {"j", ms.j},
              {"rows", m.rows},
              {"cols", m.cols},
              {"entries", m.entries.size()},
              {"out", out_path}});
    return 0;
}

int run_project(const std::string& rep, const std::string& in_path) {
    const auto w = parse_weight(rep);
    std::ifstream in(in_path);
    if (!in) throw std::invalid_argument("project: cannot open input file " + in_path);
    const Json doc = Json::parse(in);

    const bool field_coeffs = doc.contains("terms") && !doc.at("terms").empty() &&
                              doc.at("terms").front().at("coeff").is_object();
    if (field_coeffs) {
        const auto u = cg3::fp_poly_from_json(doc);
        emit(cg3::json_of(cg3::project(w, u)));
    } else {
        const auto u = cg3::rational_poly_from_json(doc);
        emit(cg3::json_of(cg3::project(w, u)));
    }
    return 0;
}

int run_verify(bool grassmannian, cg3::BundleInstance inst) {
    const std::uint64_t base_seed = inst.seed;
    Json seeds_tried = Json::array();
    cg3::BundleReport rep;
    for (std::uint64_t attempt = 0; attempt <= 3; ++attempt) {
        inst.seed = base_seed + attempt;
        rep = grassmannian ? cg3::verify_grassmannian_bundle(inst)
                           : cg3::verify_double_bundle(inst);
        seeds_tried.push_back(inst.seed);
        std::fprintf(stderr, "[cg3] verify seed %llu: %s (%.2fs)\n",
                     static_cast<unsigned long long>(inst.seed),
                     rep.pass ? "pass" : rep.failure.c_str(), rep.seconds);
        // only a rank deficiency can be blamed on the random point
        if (rep.pass || rep.failure != "RankDeficient") break;
    }
    Json doc = cg3::json_of(rep);
    doc.erase("seconds");  // wall-clock time stays on stderr, stdout is byte-reproducible
    doc["seedsTried"] = seeds_tried;
    emit(doc);
    return rep.pass ? 0 : 1;
}

int run_search(const std::string& src, long long max_label, int summands) {
    const auto source = parse_weight(src);
    const auto found = cg3::candidate_search(source, max_label, summands);
    emit(Json{{"source", cg3::json_of(source)},
              {"maxLabel", max_label},
              {"summands", summands},
              {"candidates", cg3::json_of(found)}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Clebsch-Gordan calculus for SL(3): decompositions, equivariant "
                 "projections, basis-map matrices and finite-field rank certificates"};
    app.require_subcommand(1);

    auto* cmd_decompose = app.add_subcommand("decompose", "decompose a tensor product");
    std::vector<std::string> dec_reps;
    cmd_decompose->add_option("--rep", dec_reps, "factor weight a,b (twice)")
        ->required()
        ->expected(2);

    auto* cmd_homspace = app.add_subcommand("homspace", "fusion parameters s, t, J");
    std::vector<std::string> hom_srcs;
    std::string hom_dst;
    cmd_homspace->add_option("--src", hom_srcs, "factor weight a,b (twice)")
        ->required()
        ->expected(2);
    cmd_homspace->add_option("--dst", hom_dst, "target weight e,f")->required();

    auto* cmd_matrix = app.add_subcommand("matrix", "matrix of one basis map");
    std::vector<std::string> mat_srcs;
    std::string mat_dst, mat_out;
    long long mat_j = 0;
    cmd_matrix->add_option("--src", mat_srcs, "factor weight a,b (twice)")
        ->required()
        ->expected(2);
    cmd_matrix->add_option("--dst", mat_dst, "target weight e,f")->required();
    cmd_matrix->add_option("--j", mat_j, "expansion index")->required();
    cmd_matrix->add_option("--out", mat_out, "output file for the matrix JSON")->required();

    auto* cmd_project = app.add_subcommand("project", "project onto the kernel summand");
    std::string proj_rep, proj_in;
    cmd_project->add_option("--rep", proj_rep, "ambient weight a,b")->required();
    cmd_project->add_option("--in", proj_in, "polynomial JSON file")->required();

    auto* cmd_verify = app.add_subcommand("verify", "finite-field rank certificates");
    cmd_verify->require_subcommand(1);
    std::string v_src, v_mid, v_dst;
    long long v_j = 0, v_k = 0;
    std::uint64_t v_prime = 32003, v_seed = 42;
    auto* cmd_double = cmd_verify->add_subcommand("double-bundle", "one kernel direction");
    auto* cmd_grass = cmd_verify->add_subcommand("grass", "k >= 2 kernel directions");
    CLI::Option* opt_k = nullptr;
    for (CLI::App* sub : {cmd_double, cmd_grass}) {
        sub->add_option("--src", v_src, "source weight a,b")->required();
        sub->add_option("--mid", v_mid, "middle weight c,d")->required();
        sub->add_option("--dst", v_dst, "target weight e,f")->required();
        sub->add_option("--prime", v_prime, "field characteristic");
        sub->add_option("--seed", v_seed, "random seed");
    }
    cmd_double->add_option("--j", v_j, "expansion index")->required();
    opt_k = cmd_grass->add_option("--k", v_k, "expected kernel dimension");

    auto* cmd_search = app.add_subcommand("search", "dimension-constrained candidate search");
    std::string search_src;
    long long search_max_label = 0;
    int search_summands = 1;
    cmd_search->add_option("--src", search_src, "source weight a,b")->required();
    cmd_search->add_option("--max-label", search_max_label, "label bound")->required();
    cmd_search->add_option("--summands", search_summands, "summand count, 1 or 2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("UsageError", e.what());
    }

    try {
        if (*cmd_decompose) return run_decompose(dec_reps);
        if (*cmd_homspace) return run_homspace(hom_srcs, hom_dst);
        if (*cmd_matrix) return run_matrix(mat_srcs, mat_dst, mat_j, mat_out);
        if (*cmd_project) return run_project(proj_rep, proj_in);
        if (*cmd_double) {
            cg3::BundleInstance inst{parse_weight(v_src), parse_weight(v_mid),
                                     parse_weight(v_dst), v_j, std::nullopt, v_prime, v_seed};
            return run_verify(false, inst);
        }
        if (*cmd_grass) {
            cg3::BundleInstance inst{parse_weight(v_src), parse_weight(v_mid),
                                     parse_weight(v_dst), std::nullopt, std::nullopt,
                                     v_prime, v_seed};
            if (opt_k->count() > 0) inst.k = v_k;
            return run_verify(true, inst);
        }
        if (*cmd_search) return run_search(search_src, search_max_label, search_summands);
        return emit_error("UsageError", "no subcommand selected");
    } catch (const cg3::DenominatorDivisibleByP& e) {
        return emit_error("DenominatorDivisibleByP", e.what());
    } catch (const cg3::Json::exception& e) {
        return emit_error("ParseError", e.what());
    } catch (const std::invalid_argument& e) {
        return emit_error("InvalidArgument", e.what());
    } catch (const std::exception& e) {
        return emit_error("Internal", e.what());
    }
}
