/*
hyperfan
Copyright 2026 The hyperfan authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hyperfan/hyperfan.hpp"

namespace hf = hyperfan;
namespace fs = std::filesystem;

namespace {

// Exit codes: 0 ok, 2 malformed input, 3 class mismatch, 4 embedding
// failure, 5 verification failure, 6 stress dimension mismatch.
constexpr int kExitMalformed = 2;
constexpr int kExitClass = 3;
constexpr int kExitEmbedding = 4;
constexpr int kExitVerification = 5;
constexpr int kExitStressDim = 6;

void write_output(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw hf::MalformedGraph("cannot write " + out_path);
    }
    out << text;
}

hf::json class_to_json(const hf::SparsityClass& cls)
{
    hf::json j;
    switch (cls.tag) {
        case hf::SparsityClass::Tag::Laman:
            j["class"] = "Laman";
            break;
        case hf::SparsityClass::Tag::LamanPlusK:
            j["class"] = "LamanPlusK";
            j["k"] = cls.k;
            {
                auto& w = j["witness"] = hf::json::array();
                for (const auto& [a, b] : cls.witness) {
                    w.push_back({a, b});
                }
            }
            break;
        case hf::SparsityClass::Tag::Deficient:
            j["class"] = "Deficient";
            break;
        case hf::SparsityClass::Tag::Other:
            j["class"] = "Other";
            break;
    }
    return j;
}

int map_error(const std::exception& e)
{
    std::cerr << "error: " << e.what() << "\n";
    if (dynamic_cast<const hf::NotLamanPlusOne*>(&e) != nullptr ||
        dynamic_cast<const hf::NotDecomposable*>(&e) != nullptr) {
        return kExitClass;
    }
    if (const auto* emb = dynamic_cast<const hf::EmbeddingFailed*>(&e)) {
        std::cerr << "failing step index: " << emb->failing_step << "\n";
        return kExitEmbedding;
    }
    if (dynamic_cast<const hf::NonNiceTiling*>(&e) != nullptr ||
        dynamic_cast<const hf::NotASelfStress*>(&e) != nullptr ||
        dynamic_cast<const hf::LiftInconsistent*>(&e) != nullptr ||
        dynamic_cast<const hf::NotNiceFan*>(&e) != nullptr ||
        dynamic_cast<const hf::DegenerateJump*>(&e) != nullptr) {
        return kExitVerification;
    }
    return kExitMalformed;  // malformed JSON, bad graph/tiling, degeneracies
}

int cmd_analyze(const std::string& in, const std::string& out)
{
    const hf::Graph g = hf::graph_from_json(hf::load_json_file(in));
    if (g.vertex_count() == 0) {
        throw hf::MalformedGraph("graph has no vertices");
    }
    const auto cls = hf::classify_sparsity(g);
    hf::json j = class_to_json(cls);
    j["v"] = g.vertex_count();
    j["e"] = g.edge_count();
    const bool decomposable =
        cls.tag == hf::SparsityClass::Tag::Laman ||
        (cls.tag == hf::SparsityClass::Tag::LamanPlusK && cls.k == 1);
    if (decomposable) {
        j["henneberg"] = hf::sequence_to_json(hf::henneberg_decompose(g));
    }
    else {
        j["henneberg"] = nullptr;
    }
    write_output(hf::dump_json(j), out);
    return 0;
}

int cmd_embed(
    const std::string& in,
    const std::string& out,
    const hf::EmbedderConfig& cfg)
{
    const hf::Graph g = hf::graph_from_json(hf::load_json_file(in));
    hf::EmbedStats stats;
    const hf::Tiling t = hf::embed_laman_plus_one(g, cfg, &stats);
    hf::json j = hf::tiling_to_json(t);
    j["meta"] = {
        {"seed", cfg.rng_seed},
        {"max_samples", cfg.max_samples_per_step},
        {"perturbation", cfg.perturbation_radius},
        {"backtracks", stats.backtracks},
        {"sequences_tried", stats.sequences_tried},
    };
    write_output(hf::dump_json(j), out);
    return 0;
}

int cmd_verify(const std::string& in, const std::string& out, bool require_nice)
{
    const hf::Tiling t = hf::tiling_from_json(hf::load_json_file(in));

    hf::json j;
    const hf::Graph g = hf::skeleton(t);
    const auto cls = hf::classify_sparsity(g);
    j["graph_class"] = class_to_json(cls);
    const bool decomposable =
        cls.tag == hf::SparsityClass::Tag::Laman ||
        (cls.tag == hf::SparsityClass::Tag::LamanPlusK && cls.k == 1);
    j["henneberg_steps"] =
        decomposable ? hf::json(hf::henneberg_decompose(g).steps.size()) : hf::json(nullptr);

    const auto nice = hf::is_nice(t);
    j["nice"] = nice.nice;
    j["witness"] = nice.nice ? hf::json(nullptr) : hf::json(nice.witness);
    j["digon_count"] = hf::digon_count(t);

    bool residual_fail = false;
    try {
        const auto counts = hf::count_report(t);
        j["counts"] = hf::count_report_to_json(counts);
        if (nice.nice &&
            (counts.euler_residual != 0 || counts.corner_residual_a != 0 ||
             counts.corner_residual_b != 0)) {
            residual_fail = true;
        }
    }
    catch (const hf::NonNiceTiling&) {
        j["counts"] = nullptr;  // some tile is outside the two counted classes
    }

    const auto basis = hf::self_stress_basis(t);
    j["stress_dimension"] = basis.size();
    j["closure_residual"] = nullptr;
    j["hyperbolicity"] = nullptr;
    j["horn_count"] = nullptr;
    if (basis.size() == 1) {
        const auto vp = hf::lift(t, basis[0]);
        j["closure_residual"] = vp.closure_residual;
        const auto cert = hf::is_hyperbolic_certificate(vp);
        j["hyperbolicity"] = cert.verdict == hf::Hyperbolicity::CertifiedHyperbolic
                                 ? "CertifiedHyperbolic"
                                 : "NotCertified";
        if (cert.verdict == hf::Hyperbolicity::CertifiedHyperbolic && nice.nice) {
            j["horn_count"] = hf::horn_count(vp);
        }
    }

    write_output(hf::dump_json(j), out);
    if (residual_fail || (require_nice && !nice.nice)) {
        std::cerr << "verification failed" << (nice.nice ? "" : ": " + nice.witness) << "\n";
        return kExitVerification;
    }
    return 0;
}

int cmd_lift(
    const std::string& in,
    const std::string& out,
    int stress_index,
    const std::string& obj_path)
{
    const hf::Tiling t = hf::tiling_from_json(hf::load_json_file(in));
    const auto basis = hf::self_stress_basis(t);
    if (stress_index < 0) {
        if (basis.size() != 1) {
            std::cerr << "error: stress space has dimension " << basis.size()
                      << "; pick one with --stress-index\n";
            return kExitStressDim;
        }
        stress_index = 0;
    }
    if (stress_index >= static_cast<int>(basis.size())) {
        std::cerr << "error: stress index " << stress_index << " out of range (dimension "
                  << basis.size() << ")\n";
        return kExitStressDim;
    }

    const auto vp = hf::lift(t, basis[static_cast<std::size_t>(stress_index)]);
    hf::json j = hf::polytope_to_json(vp);
    const auto cert = hf::is_hyperbolic_certificate(vp);
    j["certificate"] = cert.verdict == hf::Hyperbolicity::CertifiedHyperbolic
                           ? "CertifiedHyperbolic"
                           : "NotCertified";
    j["simplicial"] = cert.simplicial;
    j["horn_count"] =
        (cert.verdict == hf::Hyperbolicity::CertifiedHyperbolic && hf::is_nice(vp.fan).nice)
            ? hf::json(hf::horn_count(vp))
            : hf::json(nullptr);
    try {
        const auto coloring = hf::color_edges(vp);
        auto& colors = j["edge_colors"] = hf::json::array();
        for (const auto c : coloring.colors) {
            colors.push_back(c == hf::EdgeColor::Red ? "red" : "blue");
        }
    }
    catch (const hf::DegenerateJump&) {
        j["edge_colors"] = nullptr;
    }

    if (!obj_path.empty()) {
        const auto mesh = hf::reciprocal_surface(vp);
        std::ostringstream obj;
        for (const auto& v : mesh.vertices) {
            obj << "v " << v.x << " " << v.y << " " << v.z << "\n";
        }
        for (const auto& f : mesh.faces) {
            obj << "f";
            for (const int idx : f) {
                obj << " " << idx + 1;
            }
            obj << "\n";
        }
        write_output(obj.str(), obj_path);
    }

    write_output(hf::dump_json(j), out);
    return 0;
}

int cmd_render(
    const std::string& in,
    const std::string& out,
    const std::string& projection,
    int samples,
    const std::string& highlight,
    const std::string& coloring_path)
{
    const hf::Tiling t = hf::tiling_from_json(hf::load_json_file(in));
    hf::RenderSpec spec;
    spec.samples_per_arc = samples;
    if (projection == "north") {
        spec.projection = hf::RenderSpec::Projection::StereographicNorth;
    }
    else if (projection == "south") {
        spec.projection = hf::RenderSpec::Projection::StereographicSouth;
    }
    else {
        spec.projection = hf::RenderSpec::Projection::BothHemispheres;
    }

    std::optional<hf::EdgeColoring> coloring;
    if (highlight == "digons") {
        spec.highlight = hf::RenderSpec::Highlight::Digons;
    }
    else if (highlight == "colors") {
        spec.highlight = hf::RenderSpec::Highlight::Colors;
        if (coloring_path.empty()) {
            throw hf::MalformedGraph("highlight=colors needs --coloring <lift.json>");
        }
        const auto j = hf::load_json_file(coloring_path);
        if (!j.contains("edge_colors") || !j.at("edge_colors").is_array()) {
            throw hf::MalformedGraph("coloring file lacks an edge_colors array");
        }
        hf::EdgeColoring c;
        for (const auto& jc : j.at("edge_colors")) {
            c.colors.push_back(
                jc.get<std::string>() == "red" ? hf::EdgeColor::Red : hf::EdgeColor::Blue);
        }
        coloring = std::move(c);
    }

    write_output(hf::render_svg(t, spec, coloring), out);
    return 0;
}

int cmd_corpus(
    const std::string& out_dir,
    int count,
    int vertices,
    std::uint64_t seed,
    const std::string& base,
    std::optional<bool> planar)
{
    hf::CorpusConfig cfg;
    cfg.count = count;
    cfg.vertices = vertices;
    cfg.seed = seed;
    cfg.base = base == "k4" ? hf::CorpusConfig::Base::K4 : hf::CorpusConfig::Base::Edge;
    cfg.planar_only = planar;

    fs::create_directories(out_dir);
    const auto graphs = hf::generate_corpus(cfg);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "graph_%03zu.json", i);
        std::ofstream out(fs::path(out_dir) / name, std::ios::binary);
        out << hf::dump_json(hf::graph_to_json(graphs[i]));
    }
    hf::json meta = {
        {"count", count},
        {"vertices", vertices},
        {"seed", seed},
        {"base", base},
        {"planar_only", cfg.planar_only.value_or(cfg.base == hf::CorpusConfig::Base::K4)},
    };
    std::cout << hf::dump_json(meta);
    return 0;
}

int cmd_survey(const std::vector<std::string>& inputs, const std::string& out)
{
    std::ostringstream csv;
    csv << "edge_id,color,sign\n";
    std::vector<hf::SurveyReport> reports;
    std::vector<std::string> stems;
    for (const auto& in : inputs) {
        const hf::Tiling t = hf::tiling_from_json(hf::load_json_file(in));
        const auto basis = hf::self_stress_basis(t);
        if (basis.size() != 1) {
            std::cerr << "error: " << in << " has stress dimension " << basis.size() << "\n";
            return kExitStressDim;
        }
        reports.push_back(hf::survey_report(hf::lift(t, basis[0])));
        stems.push_back(fs::path(in).stem().string());
    }
    const bool prefixed = inputs.size() > 1;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        for (const auto& row : reports[i].edges) {
            csv << (prefixed ? stems[i] + "/" : "") << row.edge_id << ","
                << (row.color == hf::EdgeColor::Red ? "red" : "blue") << "," << row.sign
                << "\n";
        }
    }
    csv << "vertex_id,degree,reflex_position\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        for (const auto& row : reports[i].vertices) {
            csv << (prefixed ? stems[i] + "/" : "") << row.vertex_id << "," << row.degree
                << "," << row.reflex_position << "\n";
        }
    }
    write_output(csv.str(), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Pointed spherical pseudo-tilings, self-stresses and hyperbolic fans"};
    app.require_subcommand(1);

    std::string in, out, obj_path, coloring_path;
    std::string projection = "both", highlight = "none", base = "edge";
    bool require_nice = false;
    int samples = 32, stress_index = -1, count = 10, vertices = 8;
    std::uint64_t seed = 0;
    hf::EmbedderConfig ecfg;
    std::vector<std::string> inputs;
    std::optional<bool> planar;

    auto* analyze = app.add_subcommand("analyze", "Classify a graph and decompose it");
    analyze->add_option("graph", in, "graph JSON file")->required();
    analyze->add_option("-o,--output", out, "output file (default stdout)");

    auto* embed = app.add_subcommand("embed", "Embed a Laman-plus-one graph on the sphere");
    embed->add_option("graph", in, "graph JSON file")->required();
    embed->add_option("-o,--output", out, "output file (default stdout)");
    embed->add_option("--seed", ecfg.rng_seed, "random seed (default 0)");
    embed->add_option("--max-samples", ecfg.max_samples_per_step, "placement budget per step")
        ->check(CLI::PositiveNumber);
    embed->add_option("--perturbation", ecfg.perturbation_radius, "degenerate retry radius")
        ->check(CLI::Range(1e-9, 0.1));

    auto* verify = app.add_subcommand("verify", "Validate a tiling and report its counts");
    verify->add_option("tiling", in, "tiling JSON file")->required();
    verify->add_option("-o,--output", out, "output file (default stdout)");
    verify->add_flag("--require-nice", require_nice, "fail unless the tiling is nice");

    auto* liftc = app.add_subcommand("lift", "Lift a self-stress to a virtual polytope");
    liftc->add_option("tiling", in, "tiling JSON file")->required();
    liftc->add_option("-o,--output", out, "output file (default stdout)");
    liftc->add_option("--stress-index", stress_index, "basis element when dimension != 1");
    liftc->add_option("--obj", obj_path, "also write the reciprocal surface as OBJ");

    auto* render = app.add_subcommand("render", "Render a tiling as SVG");
    render->add_option("tiling", in, "tiling JSON file")->required();
    render->add_option("-o,--output", out, "output file (default stdout)");
    render->add_option("--projection", projection, "north | south | both")
        ->check(CLI::IsMember({"north", "south", "both"}));
    render->add_option("--samples", samples, "polyline samples per arc (>= 8)");
    render->add_option("--highlight", highlight, "digons | colors | none")
        ->check(CLI::IsMember({"digons", "colors", "none"}));
    render->add_option("--coloring", coloring_path, "lift JSON with edge_colors");

    auto* corpus = app.add_subcommand("corpus", "Generate random graphs");
    corpus->add_option("--out", out, "output directory")->required();
    corpus->add_option("--count", count, "number of graphs");
    corpus->add_option("--vertices", vertices, "target vertex count");
    corpus->add_option("--seed", seed, "random seed");
    corpus->add_option("--base", base, "edge | k4")->check(CLI::IsMember({"edge", "k4"}));
    corpus->add_flag(
        "--planar,!--no-planar",
        [&planar](std::int64_t v) { planar = v > 0; },
        "keep growth steps planar (default: on for k4)");

    auto* survey = app.add_subcommand("survey", "Export stress signs and corner data as CSV");
    survey->add_option("tilings", inputs, "tiling JSON files")->required();
    survey->add_option("-o,--output", out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            return cmd_analyze(in, out);
        }
        if (embed->parsed()) {
            return cmd_embed(in, out, ecfg);
        }
        if (verify->parsed()) {
            return cmd_verify(in, out, require_nice);
        }
        if (liftc->parsed()) {
            return cmd_lift(in, out, stress_index, obj_path);
        }
        if (render->parsed()) {
            return cmd_render(in, out, projection, samples, highlight, coloring_path);
        }
        if (corpus->parsed()) {
            return cmd_corpus(out, count, vertices, seed, base, planar);
        }
        if (survey->parsed()) {
            return cmd_survey(inputs, out);
        }
    }
    catch (const std::exception& e) {
        return map_error(e);
    }
    return 0;
}
