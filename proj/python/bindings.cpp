#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quotsing/center.hpp"
#include "quotsing/monomial.hpp"
#include "quotsing/quiver.hpp"
#include "quotsing/report.hpp"
#include "quotsing/singular_locus.hpp"

namespace py = pybind11;
using namespace quotsing;

namespace {

// Supports as sorted 1-based coordinate lists.
std::vector<std::vector<int>> supports_1based(const std::vector<Support>& supports) {
    std::vector<std::vector<int>> out;
    for (auto s : supports) out.push_back(support_to_list(s));
    return out;
}

std::vector<std::vector<std::int32_t>> exponents(const std::vector<ExponentVector>& vs) {
    std::vector<std::vector<std::int32_t>> out;
    for (const auto& v : vs) out.emplace_back(v.entries().begin(), v.entries().end());
    return out;
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Abelian quotient singularities C^n/G: invariants, McKay quivers, contraction algebra centers";

    // Kept alive for the interpreter's lifetime; the instance carries the error kind.
    static py::handle error = py::exception<Error>(m, "QuotsingError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    m.def("normalize_spec", [](const std::string& spec) { return group_spec_to_json(parse_group_spec(spec)); },
          py::arg("spec"), "Canonical JSON for a group spec");

    m.def(
        "group_order",
        [](const std::string& spec, std::size_t max_order) { return build_group(parse_group_spec(spec), max_order).order(); },
        py::arg("spec"), py::arg("max_order") = kDefaultMaxGroupOrder);

    m.def(
        "hilbert_basis",
        [](const std::string& spec) {
            auto g = build_group(parse_group_spec(spec));
            py::gil_scoped_release release;
            return exponents(hilbert_basis(g));
        },
        py::arg("spec"), "Minimal generators of the invariant ring, as exponent vectors");

    m.def(
        "singular_locus",
        [](const std::string& spec) {
            auto g = build_group(parse_group_spec(spec));
            auto rep = singular_locus_report(g);
            py::dict d;
            d["components"] = supports_1based(rep.components);
            d["reduced_ideal"] = supports_1based(rep.reduced_ideal.supports);
            d["smooth"] = rep.pairs.empty();
            return d;
        },
        py::arg("spec"), "Components (maximal fixed coordinate sets) and the reduced locus ideal");

    m.def(
        "reduced_center",
        [](const std::string& spec) {
            auto g = build_group(parse_group_spec(spec));
            py::gil_scoped_release release;
            MonomialTable table(g);
            return supports_1based(reduced_center_family(table).supports);
        },
        py::arg("spec"), "Support antichain of the radical ideal cut out by the reduced center");

    m.def(
        "quiver_sizes",
        [](const std::string& spec) {
            auto g = build_group(parse_group_spec(spec));
            auto q = build_mckay(g);
            auto c = contraction(q);
            py::dict d;
            d["mckay"] = py::make_tuple(q.vertices.size(), q.arrows.size());
            d["contraction"] = py::make_tuple(c.vertices.size(), c.arrows.size());
            d["connected"] = is_connected(c).connected;
            return d;
        },
        py::arg("spec"), "(vertices, arrows) of the McKay and contraction quivers");

    m.def(
        "mckay_dot",
        [](const std::string& spec, bool contracted) {
            auto g = build_group(parse_group_spec(spec));
            auto q = build_mckay(g);
            return contracted ? export_dot(g, contraction(q)) : export_dot(g, q);
        },
        py::arg("spec"), py::arg("contraction") = false);

    m.def(
        "center_hilbert",
        [](const std::string& spec, int max_degree) {
            auto g = build_group(parse_group_spec(spec));
            CenterHilbert h;
            {
                py::gil_scoped_release release;
                MonomialTable table(g);
                ContractionAlgebra algebra(table);
                h = algebra.center_hilbert(max_degree);
            }
            py::dict d;
            d["dim_z"] = h.dim_z;
            d["dim_r"] = h.dim_r;
            d["invariant_count"] = h.invariant_count;
            return d;
        },
        py::arg("spec"), py::arg("max_degree"), "Per-degree dimensions of the center and its reduced ring");

    m.def(
        "dense_center_oracle",
        [](const std::string& spec, int max_degree) {
            auto g = build_group(parse_group_spec(spec));
            py::gil_scoped_release release;
            return dense_center_oracle(g, max_degree);
        },
        py::arg("spec"), py::arg("max_degree"));

    m.def(
        "analyze",
        [](const std::string& spec, int max_degree) {
            AnalyzeOptions opts;
            opts.max_degree = max_degree;
            auto parsed = parse_group_spec(spec);
            py::gil_scoped_release release;
            return analyze(parsed, opts).json;
        },
        py::arg("spec"), py::arg("max_degree") = -1, "Full report as canonical JSON");

    m.def(
        "verify",
        [](const std::string& spec, int max_degree, bool run_oracle) {
            VerifyOptions opts;
            opts.max_degree = max_degree;
            opts.run_oracle = run_oracle;
            auto parsed = parse_group_spec(spec);
            VerifyOutcome out;
            {
                py::gil_scoped_release release;
                out = verify_group(parsed, opts);
            }
            std::vector<std::tuple<std::string, std::string, std::string>> rows;
            for (const auto& c : out.checks) rows.emplace_back(c.name, status_name(c.status), c.detail);
            return rows;
        },
        py::arg("spec"), py::arg("max_degree") = -1, py::arg("run_oracle") = true,
        "List of (check, status, detail)");

    m.def(
        "census",
        [](int dim_max, std::size_t order_max, std::size_t samples, std::uint64_t seed, int dim_min, bool cyclic_only,
           bool run_oracle, unsigned threads) {
            SweepConfig cfg;
            cfg.dim_min = dim_min;
            cfg.dim_max = dim_max;
            cfg.order_max = order_max;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.cyclic_only = cyclic_only;
            cfg.run_oracle = run_oracle;
            cfg.threads = threads;
            py::gil_scoped_release release;
            return census(cfg).json;
        },
        py::arg("dim_max"), py::arg("order_max"), py::arg("samples"), py::arg("seed"), py::arg("dim_min") = 2,
        py::arg("cyclic_only") = false, py::arg("run_oracle") = true, py::arg("threads") = 0,
        "Randomized verification sweep, as canonical JSON");
}
