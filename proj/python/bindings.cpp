// Thin bindings: structured results cross the boundary as JSON text and are decoded in Python.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "json.hpp"
#include "polycss/catalog.hpp"
#include "polycss/cli.hpp"
#include "polycss/css.hpp"
#include "polycss/polycyclic.hpp"
#include "polycss/search.hpp"

namespace py = pybind11;
using namespace polycss;

namespace {

std::string params_json(const QuantumParams& p) {
    nlohmann::ordered_json j;
    j["q"] = p.q_base;
    j["label"] = p.label;
    j["n"] = p.n;
    j["k"] = p.k;
    j["d"] = p.d;
    j["d_exact"] = p.d_exact;
    j["mds"] = is_mds(p);
    j["witness"] = p.witness;
    return j.dump();
}

std::string factor_json(int q, const std::string& text) {
    const Poly p = parse_poly_any(text, field_of_order(q));
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& f : factor(p).factors)
        out.push_back({{"factor", format_expression(f.factor)},
                       {"table", poly_format(f.factor)},
                       {"multiplicity", f.multiplicity}});
    return out.dump();
}

std::string verify_json(int q, const std::string& modulus, const std::string& g1, const std::string& second,
                        std::optional<int> n, std::optional<int> k, std::optional<int> d,
                        std::optional<std::string> convention, std::uint64_t budget) {
    RowInput in;
    in.q = q;
    in.modulus = modulus;
    in.g1 = g1;
    in.second = second;
    in.n = n;
    in.k = k;
    in.d = d;
    if (convention) {
        in.convention = parse_convention(*convention);
        if (!in.convention) throw Error(ErrorKind::InvalidParams, "convention must be C2 or C2perp");
    }
    in.enumeration.budget = budget;
    py::gil_scoped_release release;
    return verify_table_row(in).to_json();
}

std::string code_json(int q, const std::string& modulus, const std::string& g, std::uint64_t budget) {
    const Field field = field_of_order(q);
    const AmbientRing ring = AmbientRing::from_modulus(parse_poly_any(modulus, field));
    const LinearCode c = ideal_code(parse_poly_any(g, field), ring);
    nlohmann::ordered_json j;
    j["n"] = c.length();
    j["k"] = c.dimension();
    if (c.dimension() > 0) {
        EnumOptions opts;
        opts.budget = budget;
        const DistanceResult r = min_distance(c, opts);
        j["d"] = r.d;
        j["d_exact"] = r.exact;
        j["method"] = r.method;
    }
    return j.dump();
}

std::string search_json(int q, int n_min, int n_max, std::vector<int> a, std::vector<int> b, int i_min, int i_max,
                        std::uint64_t seed, int jobs, std::uint64_t budget) {
    SearchConfig cfg;
    cfg.q = q;
    cfg.n_min = n_min;
    cfg.n_max = n_max;
    cfg.a_values = std::move(a);
    cfg.b_values = std::move(b);
    cfg.i_min = i_min;
    cfg.i_max = i_max;
    cfg.seed = seed;
    cfg.jobs = jobs;
    cfg.budget = budget;
    Catalog empty;
    std::string out = "[";
    py::gil_scoped_release release;
    search_trinomial_pairs(cfg, empty, [&](const SearchHit& h) {
        if (out.size() > 1) out += ",";
        out += h.to_json();
    });
    return out + "]";
}

QuantumParams make_params(int q, int n, int k, int d) { return QuantumParams::make(q, n, k, d); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum CSS codes from polycyclic codes";

    py::register_exception<Error>(m, "PolycssError", PyExc_ValueError);

    m.attr("DEFAULT_BUDGET") = kDefaultBudget;
    m.def("supported_field_orders", [] {
        auto s = supported_field_orders();
        return std::vector<int>(s.begin(), s.end());
    });
    m.def("factor_json", &factor_json, py::arg("q"), py::arg("poly"));
    m.def("verify_row_json", &verify_json, py::arg("q"), py::arg("modulus"), py::arg("g1"), py::arg("second"),
          py::arg("n") = py::none(), py::arg("k") = py::none(), py::arg("d") = py::none(),
          py::arg("convention") = py::none(), py::arg("budget") = kDefaultBudget);
    m.def("ideal_code_json", &code_json, py::arg("q"), py::arg("modulus"), py::arg("g"),
          py::arg("budget") = kDefaultBudget);
    m.def("search_trinomial_json", &search_json, py::arg("q"), py::arg("n_min"), py::arg("n_max"),
          py::arg("a") = std::vector<int>{}, py::arg("b") = std::vector<int>{}, py::arg("i_min") = 1,
          py::arg("i_max") = -1, py::arg("seed") = 0, py::arg("jobs") = 1, py::arg("budget") = kDefaultBudget);

    py::class_<QuantumParams>(m, "QuantumParams")
        .def(py::init(&make_params), py::arg("q"), py::arg("n"), py::arg("k"), py::arg("d"))
        .def_readonly("q", &QuantumParams::q_base)
        .def_readonly("n", &QuantumParams::n)
        .def_readonly("k", &QuantumParams::k)
        .def_readonly("d", &QuantumParams::d)
        .def_readonly("d_exact", &QuantumParams::d_exact)
        .def_property_readonly("mds", [](const QuantumParams& p) { return is_mds(p); })
        .def("to_json", &params_json)
        .def("__repr__", &QuantumParams::brackets);
    m.def("direct_sum", &direct_sum_quantum);
    m.def("extend", &propagate_extend, py::arg("p"), py::arg("steps") = 1);
    m.def("puncture", &propagate_puncture);
    m.def("subcode", &propagate_subcode);
    m.def("theorem2", &combine_theorem2);

    py::class_<Catalog>(m, "Catalog")
        .def(py::init<>())
        .def("ingest_file",
             [](Catalog& c, const std::string& path) {
                 const IngestResult r = c.ingest_file(path);
                 return py::make_tuple(r.loaded, r.accepted, r.rejected.size());
             })
        .def("query_exact",
             [](const Catalog& c, int q, int n, int k) -> std::optional<std::string> {
                 if (auto r = c.query_exact(q, n, k)) return record_to_json(*r);
                 return std::nullopt;
             })
        .def("update",
             [](Catalog& c, int q, int n, int k, int d, const std::string& ref) {
                 CatalogRecord r;
                 r.q = q;
                 r.label = default_label(q);
                 r.n = n;
                 r.k = k;
                 r.d = d;
                 r.mds = n - k - 2 * (d - 1) == 0;
                 r.ref = ref;
                 return std::string(to_string(c.update_if_better(r)));
             },
             py::arg("q"), py::arg("n"), py::arg("k"), py::arg("d"), py::arg("ref") = "")
        .def("export_file", [](const Catalog& c, const std::string& path) { return c.export_file(path); })
        .def("to_json", [](const Catalog& c) { return c.to_text(CatalogFormat::Json); })
        .def("__len__", &Catalog::size);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    });
}
