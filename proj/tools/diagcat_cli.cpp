// Command-line front end: JSON in, JSON out.  Exit code 0 means the
// computation completed and, for the check commands, the verdict is PASS.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "diagcat/category.hpp"
#include "diagcat/json_io.hpp"

using namespace diagcat;

namespace {

constexpr int kExitError = 2;  // parse, schema, or validation failure
constexpr int kExitFail = 1;   // computation completed, verdict not PASS

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct Output {
    std::string path;  // empty: JSON to stdout
    bool quiet = false;

    void emit(const std::string& json_text, const std::string& human) const {
        if (path.empty()) {
            std::cout << json_text;
        } else {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + path);
            out << json_text;
            if (!quiet) std::cout << human << "\n";
        }
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--out", out.path, "write the JSON report to this path");
    cmd->add_flag("--quiet", out.quiet, "suppress the human-readable summary");
}

void check_ring_flag(const std::string& flag, Ring actual) {
    if (flag.empty()) return;
    if (flag != "Z" && flag != "Q") throw std::invalid_argument("--ring must be Z or Q");
    Ring wanted = flag == "Z" ? Ring::Z : Ring::Q;
    if (wanted != actual)
        throw std::invalid_argument("--ring " + flag + " does not match the file ring " +
                                    ring_name(actual));
}

Diagram select_stage(const io::RepFile& f, const std::string& name) {
    const Diagram& full = f.ring == Ring::Z ? f.z.diagram : f.q.diagram;
    if (name.empty()) return full;
    auto it = f.stages.find(name);
    if (it == f.stages.end()) {
        std::string valid;
        for (const auto& [k, v] : f.stages) valid += (valid.empty() ? "" : ", ") + k;
        throw std::invalid_argument("unknown stage " + name + "; valid stages: " +
                                    (valid.empty() ? "(none declared)" : valid));
    }
    return it->second;
}

int cmd_snf(const std::string& file, const Output& out) {
    auto s = smith_normal_form(io::read_matrix_z(slurp(file)));
    std::string diag;
    for (const auto& d : s.diagonal()) diag += (diag.empty() ? "" : ", ") + d.str();
    out.emit(io::write_smith(s), "rank " + std::to_string(s.rank) + ", diagonal (" + diag + ")");
    return 0;
}

int cmd_end(const std::string& file, const std::string& stage, const std::string& ring,
            const Output& out) {
    io::RepFile f = io::read_representation(slurp(file));
    check_ring_flag(ring, f.ring);
    Diagram e = select_stage(f, stage);
    std::string text;
    std::size_t dim;
    if (f.ring == Ring::Z) {
        auto alg = compute_end(f.z, e);
        dim = alg.dim();
        text = io::write_end_algebra(alg);
    } else {
        auto alg = compute_end(f.q, e);
        dim = alg.dim();
        text = io::write_end_algebra(alg);
    }
    out.emit(text, "dim " + std::to_string(dim));
    return 0;
}

template <typename T>
std::pair<std::string, std::string> hom_report(const Representation<T>& t, const Diagram& e,
                                               const std::string& p, const std::string& q) {
    auto alg = compute_end(t, e);
    CObject<T> x = tilde_object(t, alg, p);
    CObject<T> y = tilde_object(t, alg, q);
    HomResult<T> h = hom_at_stage(t, x, y, e);
    return {io::write_hom(h), "Hom(" + p + ", " + q + ") = " + h.group.to_string()};
}

int cmd_hom(const std::string& file, const std::string& p, const std::string& q,
            const std::string& stage, const std::string& ring, const Output& out) {
    io::RepFile f = io::read_representation(slurp(file));
    check_ring_flag(ring, f.ring);
    Diagram e = select_stage(f, stage);
    auto [text, human] = f.ring == Ring::Z ? hom_report(f.z, e, p, q) : hom_report(f.q, e, p, q);
    out.emit(text, human);
    return 0;
}

int cmd_homology(const std::string& file, const Output& out) {
    HomologyData h = relative_homology(io::read_graph_pair(slurp(file)));
    out.emit(io::write_homology(h),
             "H1 = " + h.h1.to_string() + ", H0 = " + h.h0.to_string());
    return 0;
}

int cmd_les_check(const std::string& file, const Output& out) {
    LesReport r = les_check(io::read_graph_triple(slurp(file)));
    out.emit(io::write_les(r), r.pass ? "PASS" : "FAIL: " + r.failures.front());
    return r.pass ? 0 : kExitFail;
}

int cmd_criterion(const std::string& rep_file, const std::string& target_file,
                  const std::string& maps_file, const Output& out) {
    io::RepFile f = io::read_representation(slurp(rep_file));
    CheckStatus overall;
    std::string text;
    if (f.ring == Ring::Z) {
        auto tp = io::read_target_z(slurp(target_file));
        auto maps = maps_file.empty() ? std::vector<TestMap<Int>>{}
                                      : io::read_test_maps_z(slurp(maps_file));
        auto rep = full_criterion(f.z, tp, maps);
        overall = rep.overall;
        text = io::write_criterion(rep);
    } else {
        auto tp = io::read_target_q(slurp(target_file));
        auto maps = maps_file.empty() ? std::vector<TestMap<Rat>>{}
                                      : io::read_test_maps_q(slurp(maps_file));
        auto rep = full_criterion(f.q, tp, maps);
        overall = rep.overall;
        text = io::write_criterion(rep);
    }
    out.emit(text, std::string("overall ") + to_string(overall));
    return overall == CheckStatus::PASS ? 0 : kExitFail;
}

template <typename T>
std::pair<std::string, std::string> tower_report(const Representation<T>& t,
                                                 const SubdiagramChain& chain) {
    EndTower<T> tw = tower(t, chain);
    std::string trace;
    for (std::size_t r : tw.image_ranks.front())
        trace += (trace.empty() ? "" : ", ") + std::to_string(r);
    bool stab = !tw.stabilized.empty() && tw.stabilized.front();
    std::string human = (stab ? "STABILIZED" : "NOT STABILIZED");
    human += "; rank trace at stage 1: (" + trace + ")";
    return {io::write_tower(tw), human};
}

int cmd_tower(const std::string& rep_file, const std::string& chain_file, const Output& out) {
    io::RepFile f = io::read_representation(slurp(rep_file));
    const Diagram& ambient = f.ring == Ring::Z ? f.z.diagram : f.q.diagram;
    SubdiagramChain chain = io::read_chain(slurp(chain_file), ambient);
    if (chain.stages.empty()) throw std::invalid_argument("chain has no stages");
    auto [text, human] =
        f.ring == Ring::Z ? tower_report(f.z, chain) : tower_report(f.q, chain);
    out.emit(text, human);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact diagram-representation toolkit"};
    app.require_subcommand(1);

    std::string matrix_file, rep_file, aux_file, maps_file, obj_p, obj_q;
    std::string stage, ring;
    Output out;

    auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf->add_option("matrix", matrix_file, "matrix JSON file")->required();
    add_output_flags(snf, out);

    auto* end = app.add_subcommand("end", "endomorphism algebra of a representation stage");
    end->add_option("representation", rep_file, "representation JSON file")->required();
    end->add_option("--stage", stage, "named stage (default: the full diagram)");
    end->add_option("--ring", ring, "expected ring, Z or Q");
    add_output_flags(end, out);

    auto* hom = app.add_subcommand("hom", "hom group between two tautological objects");
    hom->add_option("representation", rep_file, "representation JSON file")->required();
    hom->add_option("p", obj_p, "source object")->required();
    hom->add_option("q", obj_q, "target object")->required();
    hom->add_option("--stage", stage, "named stage (default: the full diagram)");
    hom->add_option("--ring", ring, "expected ring, Z or Q");
    add_output_flags(hom, out);

    auto* homology = app.add_subcommand("homology", "relative homology of a graph pair");
    homology->add_option("pair", rep_file, "graph pair JSON file")->required();
    add_output_flags(homology, out);

    auto* les = app.add_subcommand("les-check", "six-term exactness of a graph triple");
    les->add_option("triple", rep_file, "graph triple JSON file")->required();
    add_output_flags(les, out);

    auto* criterion = app.add_subcommand("criterion", "equivalence-criterion report");
    criterion->add_option("representation", rep_file, "representation JSON file")->required();
    criterion->add_option("target", aux_file, "target presentation JSON file")->required();
    criterion->add_option("maps", maps_file, "test maps JSON file");
    add_output_flags(criterion, out);

    auto* tower_cmd = app.add_subcommand("tower", "restriction tower along a stage chain");
    tower_cmd->add_option("representation", rep_file, "representation JSON file")->required();
    tower_cmd->add_option("chain", aux_file, "stage chain JSON file")->required();
    add_output_flags(tower_cmd, out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (snf->parsed()) return cmd_snf(matrix_file, out);
        if (end->parsed()) return cmd_end(rep_file, stage, ring, out);
        if (hom->parsed()) return cmd_hom(rep_file, obj_p, obj_q, stage, ring, out);
        if (homology->parsed()) return cmd_homology(rep_file, out);
        if (les->parsed()) return cmd_les_check(rep_file, out);
        if (criterion->parsed()) return cmd_criterion(rep_file, aux_file, maps_file, out);
        if (tower_cmd->parsed()) return cmd_tower(rep_file, aux_file, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
