#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prymlab/catalog.hpp"
#include "prymlab/cover.hpp"
#include "prymlab/criteria.hpp"
#include "prymlab/fpgroup.hpp"
#include "prymlab/job.hpp"
#include "prymlab/permgroup.hpp"

namespace py = pybind11;
using namespace prymlab;

namespace {

std::vector<std::vector<std::string>> qmat_to_strings(const QMat &m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            out[i].push_back(rat_to_string(m(i, j)));
    return out;
}

FiniteGroup group_from_generators(const std::vector<std::vector<int>> &gens, size_t cap) {
    std::vector<Perm> perms;
    for (const auto &g : gens) perms.emplace_back(g);
    return enumerate_group(perms, cap);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Prym representation and cover analysis";

    py::register_exception<SchemaError>(m, "SchemaError");
    py::register_exception<StageError>(m, "StageError");

    m.def(
        "run_job",
        [](const std::string &job_text, size_t cap, size_t budget, std::uint64_t seed) {
            JobOptions opts;
            opts.cap = cap;
            opts.budget = budget;
            opts.seed = seed;
            return run_job(job_text, opts);
        },
        py::arg("job_text"), py::arg("cap") = 5000, py::arg("budget") = 2000000,
        py::arg("seed") = 0,
        "Run a JSON job document and return the canonical JSON report text.");

    m.def("report_to_text", &report_to_text, py::arg("report_json"),
          "Render a JSON report as a human-readable summary.");

    m.def("catalog_names", []() {
        std::vector<std::string> names;
        for (const auto &e : catalog_groups()) names.push_back(e.name);
        return names;
    });

    m.def(
        "hyperbolicity_index",
        [](int genus, const std::vector<int> &multiplicities) {
            auto [value, hyperbolic] = hyperbolicity_index(genus, multiplicities);
            return std::make_pair(rat_to_string(value), hyperbolic);
        },
        py::arg("genus"), py::arg("multiplicities"),
        "Return (index as a fraction string, is_hyperbolic) for an orbifold group.");

    m.def(
        "cover_rank",
        [](int genus, const std::vector<std::vector<int>> &generators,
           const std::vector<int> &images, size_t cap) {
            FiniteGroup group = group_from_generators(generators, cap);
            Presentation pres = surface_presentation(genus);
            GroupHom r = validate_hom(pres, group, images);
            SchreierData data = build_cover(pres, r);
            HomologyModule mod = cover_homology(pres, r, data);
            std::vector<std::string> torsion;
            for (const auto &t : mod.torsion) torsion.push_back(t.get_str());
            return std::make_pair(mod.rank, torsion);
        },
        py::arg("genus"), py::arg("generators"), py::arg("images"), py::arg("cap") = 5000,
        "Rank and torsion of the first homology of the cover defined by a "
        "surjection of a genus-g surface group onto a permutation group.");

    m.def(
        "action_matrix",
        [](int genus, const std::vector<std::vector<int>> &generators,
           const std::vector<int> &images, int element, size_t cap) {
            FiniteGroup group = group_from_generators(generators, cap);
            Presentation pres = surface_presentation(genus);
            GroupHom r = validate_hom(pres, group, images);
            SchreierData data = build_cover(pres, r);
            HomologyModule mod = cover_homology(pres, r, data);
            return qmat_to_strings(to_rational(mod.g_action.at(element)));
        },
        py::arg("genus"), py::arg("generators"), py::arg("images"), py::arg("element"),
        py::arg("cap") = 5000,
        "Matrix of a deck transformation on the homology of the cover, "
        "entries as fraction strings.");

    m.def(
        "quaternion_is_division",
        [](const std::string &a, const std::string &b) {
            QuaternionDatum q{rat_from_string(a), rat_from_string(b)};
            return quaternion_is_division(q);
        },
        py::arg("a"), py::arg("b"),
        "Whether the rational quaternion algebra (a, b) is a division algebra.");
}
