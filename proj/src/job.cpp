#include "prymlab/job.hpp"

#include "prymlab/catalog.hpp"
#include "prymlab/cover.hpp"
#include "prymlab/criteria.hpp"
#include "prymlab/fpgroup.hpp"
#include "prymlab/galgebra.hpp"
#include "prymlab/linalg.hpp"
#include "prymlab/prym.hpp"
#include "prymlab/surface.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace prymlab {

namespace {

using nlohmann::json;

const char *kVersion = "prymlab 0.1.0";

Rat json_to_rat(const json &v) {
    if (v.is_number_integer()) return Rat((long)v.get<long long>());
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    throw SchemaError("expected an integer or a \"p/q\" string");
}

json qmat_to_json(const QMat &m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json zmat_to_json(const ZMat &m) { return qmat_to_json(to_rational(m)); }

QMat json_to_qmat(const json &v) {
    if (!v.is_array() || v.empty() || !v[0].is_array()) throw SchemaError("matrix must be an array of rows");
    size_t rows = v.size(), cols = v[0].size();
    QMat m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (v[i].size() != cols) throw SchemaError("ragged matrix rows");
        for (size_t j = 0; j < cols; ++j) m(i, j) = json_to_rat(v[i][j]);
    }
    return m;
}

Word json_to_word(const json &v) {
    if (!v.is_array()) throw SchemaError("word must be an array of nonzero integers");
    Word w;
    for (const auto &l : v) {
        if (!l.is_number_integer() || l.get<int>() == 0)
            throw SchemaError("word letters must be nonzero integers");
        w.push_back(l.get<int>());
    }
    return word::reduce(std::move(w));
}

int require_int(const json &job, const char *field) {
    if (!job.contains(field)) throw SchemaError(std::string("missing field \"") + field + "\"");
    if (!job[field].is_number_integer()) throw SchemaError(std::string("field \"") + field + "\" must be an integer");
    return job[field].get<int>();
}

std::vector<int> int_list(const json &v, const char *what) {
    if (!v.is_array()) throw SchemaError(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto &x : v) {
        if (!x.is_number_integer()) throw SchemaError(std::string(what) + " must contain integers");
        out.push_back(x.get<int>());
    }
    return out;
}

FiniteGroup load_group(const json &spec, size_t cap) {
    if (!spec.is_object()) throw SchemaError("\"group\" must be an object");
    std::vector<Perm> gens;
    if (spec.contains("catalog")) {
        auto entry = catalog_lookup(spec["catalog"].get<std::string>());
        if (!entry) throw SchemaError("unknown catalog group " + spec["catalog"].get<std::string>());
        for (const auto &im : entry->generators) gens.emplace_back(im);
    } else if (spec.contains("generators")) {
        for (const auto &im : spec["generators"]) gens.emplace_back(int_list(im, "generator"));
    } else {
        throw SchemaError("\"group\" needs \"catalog\" or \"generators\"");
    }
    return enumerate_group(gens, cap);
}

struct CoverPipeline {
    Presentation p;
    GroupHom r;
    SchreierData s;
    HomologyModule m;
    std::vector<QMat> action;
};

CoverPipeline run_cover_pipeline(const json &job, const FiniteGroup &g) {
    CoverPipeline cp;
    cp.p = surface_presentation(require_int(job, "genus"));
    if (!job.contains("images")) throw SchemaError("missing field \"images\"");
    auto images = int_list(job["images"], "\"images\"");
    for (int e : images)
        if (e < 0 || e >= (int)g.order()) throw SchemaError("image index out of range");
    try {
        cp.r = validate_hom(cp.p, g, images);
    } catch (const std::exception &ex) {
        throw StageError("validate_hom", ex.what());
    }
    try {
        cp.s = build_cover(cp.p, cp.r);
        cp.m = cover_homology(cp.p, cp.r, cp.s);
    } catch (const std::exception &ex) {
        throw StageError("cover_homology", ex.what());
    }
    for (const ZMat &a : cp.m.g_action) cp.action.push_back(to_rational(a));
    return cp;
}

json component_report(const FiniteGroup &g, const std::vector<QMat> &action,
                      const std::vector<IsotypicComponent> &comps, const ZMat *j) {
    json arr = json::array();
    for (const auto &c : comps) {
        json item;
        item["dim"] = c.subspace.cols();
        item["algebra_dim"] = c.structure.algebra_dim;
        item["center_dim"] = c.structure.center_dim;
        item["fixed_dim"] = c.structure.fixed_dim;
        item["involution_kind"] =
            c.structure.kind == InvolutionKind::First ? "first" : "second";
        switch (c.structure.type) {
        case FirstKindType::Orthogonal: item["first_kind_type"] = "orthogonal"; break;
        case FirstKindType::Symplectic: item["first_kind_type"] = "symplectic"; break;
        default: item["first_kind_type"] = nullptr;
        }
        item["fs_sign"] = c.fs_sign;
        item["label"] = c.group_label;
        if (j) item["unitary_lie_dim"] = unitary_lie_dim(g, action, *j, c);
        json e = json::array();
        for (const auto &x : c.e.c) e.push_back(rat_to_string(x));
        item["idempotent"] = std::move(e);
        arr.push_back(std::move(item));
    }
    return arr;
}

json task_analyze_cover(const json &job, const JobOptions &opts) {
    FiniteGroup g = load_group(job.at("group"), opts.cap);
    CoverPipeline cp = run_cover_pipeline(job, g);
    json res;
    res["group_order"] = g.order();
    res["num_schreier_generators"] = cp.s.schreier_gens.size();
    res["rank"] = cp.m.rank;
    json tor = json::array();
    for (const Int &t : cp.m.torsion) tor.push_back(t.get_str());
    res["torsion"] = std::move(tor);
    try {
        CoveringComplex cx = covering_complex(cp.p, cp.r, cp.s);
        ZMat j = intersection_form(cp.p, cp.s, cx, cp.m);
        equivariant_form(g, cp.action, j);
        res["euler_characteristic"] = cx.euler_characteristic().get_str();
        res["intersection_form"] = zmat_to_json(j);
        res["equivariant_form_verified"] = true;
        auto tp = transfer_projection(cp.p, cp.s, cp.m);
        res["transfer_pt_is_order_times_identity"] =
            (tp.p * tp.t == ZMat::identity(2 * cp.p.genus) * Int((long)g.order()));
        auto idems = central_idempotents(g);
        auto comps = isotypic_split(g, cp.action, idems);
        res["components"] = component_report(g, cp.action, comps, &j);
    } catch (const std::exception &ex) {
        throw StageError("analyze_cover", ex.what());
    }
    auto red = redundancy_witness(cp.p.genus, cp.r, opts.seed);
    json rj;
    rj["witness_found"] = red.found;
    if (red.found) {
        json words = json::array();
        for (const Word &w : red.witness_words) {
            json jw = json::array();
            for (int l : w) jw.push_back(l);
            words.push_back(std::move(jw));
        }
        rj["witness_words"] = std::move(words);
    }
    rj["exact_minimal_generators"] = red.exact;
    if (red.exact) rj["minimal_generators"] = red.min_generators;
    res["redundancy"] = std::move(rj);
    return res;
}

json task_twist_rep(const json &job, const JobOptions &opts) {
    FiniteGroup g = load_group(job.at("group"), opts.cap);
    CoverPipeline cp = run_cover_pipeline(job, g);
    if (!job.contains("automorphisms")) throw SchemaError("missing field \"automorphisms\"");

    std::vector<AutDatum> auts;
    auto builtin = dehn_twist_basis(cp.p.genus);
    for (const auto &spec : job["automorphisms"]) {
        if (spec.is_string()) {
            std::string name = spec.get<std::string>();
            auto it = std::find_if(builtin.begin(), builtin.end(),
                                   [&](const AutDatum &a) { return a.name == name; });
            if (it == builtin.end()) throw SchemaError("unknown twist name " + name);
            auts.push_back(*it);
        } else if (spec.is_object()) {
            AutDatum a;
            a.name = spec.value("name", "custom");
            for (const auto &w : spec.at("images")) a.images.push_back(json_to_word(w));
            for (const auto &w : spec.at("inverse_images"))
                a.inverse_images.push_back(json_to_word(w));
            try {
                verify_aut(cp.p, a);
            } catch (const std::exception &ex) {
                throw StageError("verify_aut", ex.what());
            }
            auts.push_back(std::move(a));
        } else {
            throw SchemaError("automorphism entries must be twist names or objects");
        }
    }

    json res;
    try {
        CoveringComplex cx = covering_complex(cp.p, cp.r, cp.s);
        ZMat j = intersection_form(cp.p, cp.s, cx, cp.m);
        auto idems = central_idempotents(g);
        auto comps = isotypic_split(g, cp.action, idems);
        PartialRep rep = prym_matrices(cp.p, cp.r, cp.s, cp.m, j, comps, auts);
        json mats = json::array();
        for (size_t i = 0; i < rep.names.size(); ++i) {
            json item;
            item["name"] = rep.names[i];
            item["matrix"] = qmat_to_json(rep.full_matrices[i]);
            item["determinant"] = rat_to_string(determinant(rep.full_matrices[i]));
            json blocks = json::array();
            for (const QMat &b : rep.component_matrices[i]) blocks.push_back(qmat_to_json(b));
            item["component_matrices"] = std::move(blocks);
            mats.push_back(std::move(item));
        }
        res["automorphisms"] = std::move(mats);
        json diag = json::array();
        for (size_t c = 0; c < comps.size(); ++c) {
            std::vector<QMat> blocks;
            for (size_t i = 0; i < rep.names.size(); ++i)
                blocks.push_back(rep.component_matrices[i][c]);
            json item;
            item["component_dim"] = comps[c].subspace.cols();
            item["label"] = comps[c].group_label;
            if (!blocks.empty()) {
                item["commutant_dim"] = commutant_dim(blocks);
                item["invariant_vector_dim"] = invariant_vector_dim(blocks);
                item["invariant_bilinear_dim"] = invariant_bilinear_dim(blocks);
            }
            diag.push_back(std::move(item));
        }
        res["component_diagnostics"] = std::move(diag);
    } catch (const StageError &) {
        throw;
    } catch (const std::exception &ex) {
        throw StageError("twist_rep", ex.what());
    }
    return res;
}

json task_classify(const json &job, const JobOptions &opts) {
    FiniteGroup g = load_group(job.at("group"), opts.cap);
    json res;
    try {
        // regular representation: the action of x sends basis vector h to xh
        std::vector<QMat> action;
        for (size_t x = 0; x < g.order(); ++x) {
            QMat m(g.order(), g.order());
            for (size_t h = 0; h < g.order(); ++h) m(g.mul((int)x, (int)h), h) = 1;
            action.push_back(std::move(m));
        }
        auto idems = central_idempotents(g);
        auto comps = isotypic_split(g, action, idems);
        res["group_order"] = g.order();
        res["num_conjugacy_classes"] = g.conjugacy_classes.size();
        res["num_components"] = comps.size();
        res["components"] = component_report(g, action, comps, nullptr);
    } catch (const std::exception &ex) {
        throw StageError("classify", ex.what());
    }
    return res;
}

json task_check_extension(const json &job, const JobOptions &) {
    ExtensionDatum d;
    d.genus = require_int(job, "genus");
    if (job.contains("multiplicities"))
        d.multiplicities = int_list(job["multiplicities"], "\"multiplicities\"");
    d.dim = (size_t)require_int(job, "dim");
    if (!job.contains("matrices")) throw SchemaError("missing field \"matrices\"");
    for (const auto &m : job["matrices"]) d.action.push_back(json_to_qmat(m));
    json res;
    try {
        auto [inv_dim, even] = evenness_check(d);
        res["invariant_dim"] = inv_dim;
        res["evenness_pass"] = even;
        json qu = json::array();
        bool all = true;
        for (const QMat &m : d.action) {
            bool v = quasi_unipotent_check(m);
            qu.push_back(v);
            all = all && v;
        }
        res["quasi_unipotent"] = std::move(qu);
        res["all_quasi_unipotent"] = all;
        auto [ind, hyp] = hyperbolicity_index(d.genus, d.multiplicities);
        res["hyperbolicity_index"] = rat_to_string(ind);
        res["hyperbolic"] = hyp;
    } catch (const std::exception &ex) {
        throw StageError("check_extension", ex.what());
    }
    return res;
}

json task_search_cover(const json &job, const JobOptions &opts) {
    int g = require_int(job, "genus");
    if (!job.contains("multiplicities")) throw SchemaError("missing field \"multiplicities\"");
    auto m = int_list(job["multiplicities"], "\"multiplicities\"");
    json res;
    try {
        auto found = torsion_free_cover_search(g, m, catalog_groups(), opts.budget, opts.cap);
        res["found"] = (bool)found;
        if (found) {
            res["group"] = found->group_name;
            res["images"] = found->images;
            res["kernel_genus"] = found->kernel_genus.get_str();
        }
        auto [ind, hyp] = hyperbolicity_index(g, m);
        res["hyperbolicity_index"] = rat_to_string(ind);
        res["hyperbolic"] = hyp;
    } catch (const std::exception &ex) {
        throw StageError("search_cover", ex.what());
    }
    return res;
}

json task_quaternion(const json &job, const JobOptions &) {
    if (!job.contains("a") || !job.contains("b")) throw SchemaError("quaternion needs \"a\" and \"b\"");
    QuaternionDatum q{json_to_rat(job["a"]), json_to_rat(job["b"])};
    if (q.a == 0 || q.b == 0) throw SchemaError("\"a\" and \"b\" must be nonzero");
    json res;
    try {
        bool division = quaternion_is_division(q);
        bool found = quaternion_split_search(q, 100);
        res["division"] = division;
        res["search_height"] = 100;
        res["search_found_point"] = found;
        if (division && found) throw std::logic_error("division test contradicts point search");
    } catch (const std::exception &ex) {
        throw StageError("quaternion", ex.what());
    }
    return res;
}

} // namespace

std::string run_job(const std::string &job_text, const JobOptions &opts) {
    json job;
    try {
        job = json::parse(job_text);
    } catch (const std::exception &ex) {
        throw SchemaError(std::string("invalid JSON: ") + ex.what());
    }
    if (!job.is_object()) throw SchemaError("job must be a JSON object");
    if (!job.contains("task") || !job["task"].is_string())
        throw SchemaError("missing field \"task\"");
    std::string task = job["task"].get<std::string>();

    JobOptions eff = opts;
    if (job.contains("options")) {
        const json &o = job["options"];
        if (o.contains("cap")) eff.cap = o["cap"].get<size_t>();
        if (o.contains("budget")) eff.budget = o["budget"].get<size_t>();
        if (o.contains("seed")) eff.seed = o["seed"].get<std::uint64_t>();
    }

    json results;
    json notes = json::array();
    try {
    if (task == "analyze_cover") {
        results = task_analyze_cover(job, eff);
        notes.push_back("witness search is semi-decisive: absence of a witness is not a proof");
    } else if (task == "twist_rep") {
        results = task_twist_rep(job, eff);
        notes.push_back("determinant over Q is checked in place of the reduced norm");
        notes.push_back("Zariski closures are not computed; diagnostics are necessary conditions only");
    } else if (task == "classify") {
        results = task_classify(job, eff);
    } else if (task == "check_extension") {
        results = task_check_extension(job, eff);
        notes.push_back("parity is a necessary condition; it cannot certify geometric origin");
    } else if (task == "search_cover") {
        results = task_search_cover(job, eff);
    } else if (task == "quaternion") {
        results = task_quaternion(job, eff);
    } else {
        throw SchemaError("unknown task \"" + task + "\"");
    }
    } catch (const json::exception &ex) {
        throw SchemaError(ex.what());
    }

    json report;
    report["inputs"] = job;
    report["options"] = {{"cap", eff.cap}, {"budget", eff.budget}, {"seed", eff.seed}};
    report["task"] = task;
    report["tool_version"] = kVersion;
    report["results"] = std::move(results);
    report["notes"] = std::move(notes);
    return report.dump(2) + "\n";
}

std::string report_to_text(const std::string &report_json) {
    json report = json::parse(report_json);
    std::ostringstream os;
    os << report["tool_version"].get<std::string>() << " -- task "
       << report["task"].get<std::string>() << "\n";
    const json &res = report["results"];
    for (auto it = res.begin(); it != res.end(); ++it) {
        if (it.key() == "components") {
            os << "components:\n";
            for (const auto &c : it.value()) {
                os << "  dim " << c["dim"] << ", label " << c["label"].get<std::string>()
                   << ", fs_sign " << c["fs_sign"] << ", involution "
                   << c["involution_kind"].get<std::string>();
                if (c.contains("unitary_lie_dim")) os << ", lie dim " << c["unitary_lie_dim"];
                os << "\n";
            }
        } else if (it.value().is_primitive()) {
            os << it.key() << ": " << it.value().dump() << "\n";
        }
    }
    if (report.contains("notes"))
        for (const auto &n : report["notes"]) os << "note: " << n.get<std::string>() << "\n";
    return os.str();
}

} // namespace prymlab
