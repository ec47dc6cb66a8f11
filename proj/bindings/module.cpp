#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adr/builtins.hpp"
#include "adr/expr.hpp"
#include "adr/report.hpp"

namespace py = pybind11;
using namespace adr;

namespace {

py::object json_to_py(const ojson& j) {
    switch (j.type()) {
        case ojson::value_t::null: return py::none();
        case ojson::value_t::boolean: return py::bool_(j.get<bool>());
        case ojson::value_t::number_integer: return py::int_(j.get<long long>());
        case ojson::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case ojson::value_t::number_float: return py::float_(j.get<double>());
        case ojson::value_t::string: return py::str(j.get<std::string>());
        case ojson::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case ojson::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

struct CtxPack {
    std::shared_ptr<const ADRContext> ctx;
    StandardFamily fam;
};

struct PyAlgebra {
    std::shared_ptr<const BoundAlgebra> alg;
    std::shared_ptr<CtxPack> pack;  // built on demand, shared with ADR handles

    const std::shared_ptr<CtxPack>& context() {
        if (!pack) {
            auto ctx = build_context(alg);
            pack = std::make_shared<CtxPack>(CtxPack{ctx, standard_family(ctx)});
        }
        return pack;
    }
};

struct PyModule {
    Rep rep;
};

struct PyRModule {
    std::shared_ptr<CtxPack> pack;
    SCModule mod;
};

struct PyADR {
    std::shared_ptr<CtxPack> pack;
};

PyAlgebra make_algebra(const std::string& text, const std::map<std::string, long>& params) {
    return PyAlgebra{build_bound_algebra(parse_algebra(text, params)), nullptr};
}

py::object eval_on(PyAlgebra& a, const std::string& expr) {
    ModuleExpr e = parse_module_expr(expr);
    ExprEnv env;
    env.alg = a.alg;
    if (expr_needs_context(e) || expr_needs_standards(e)) {
        env.ctx = a.context()->ctx;
        env.fam = &a.context()->fam;
    }
    ModuleValue v = eval_module_expr(e, env);
    if (std::holds_alternative<Rep>(v)) return py::cast(PyModule{std::get<Rep>(v)});
    return py::cast(PyRModule{a.context(), std::get<SCModule>(v)});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact computations with endomorphism algebras of radical-truncated projectives";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

    m.def("builtin_names", &builtin_algebra_names);
    m.def("builtin_text", [](const std::string& name) { return builtin_algebra_text(name); },
          py::arg("name"));

    py::class_<PyModule>(m, "Module")
        .def_property_readonly("dims", [](const PyModule& s) { return s.rep.dims; })
        .def_property_readonly("total_dim", [](const PyModule& s) { return s.rep.total_dim(); })
        .def_property_readonly("loewy_length",
                               [](const PyModule& s) { return loewy_length(s.rep); })
        .def_property_readonly("is_rigid", [](const PyModule& s) { return is_rigid(s.rep); })
        .def("report", [](const PyModule& s) { return json_to_py(rep_json(s.rep)); })
        .def("__repr__", [](const PyModule& s) {
            return "<Module dim " + std::to_string(s.rep.total_dim()) + ">";
        });

    py::class_<PyRModule>(m, "RModule")
        .def_property_readonly("dim", [](const PyRModule& s) { return s.mod.dim; })
        .def_property_readonly("loewy_length",
                               [](const PyRModule& s) { return sc_loewy_length(s.mod); })
        .def("composition",
             [](const PyRModule& s) {
                 auto mults = comp_multiplicities(s.mod);
                 py::dict out;
                 for (int k = 0; k < s.pack->ctx->nsum(); ++k)
                     if (mults[k])
                         out[py::make_tuple(s.pack->ctx->labels[k].i, s.pack->ctx->labels[k].j)] =
                             mults[k];
                 return out;
             })
        .def("report", [](const PyRModule& s) { return json_to_py(sc_json(*s.pack->ctx, s.mod)); })
        .def("__repr__", [](const PyRModule& s) {
            return "<RModule dim " + std::to_string(s.mod.dim) + ">";
        });

    py::class_<PyADR>(m, "ADR")
        .def_property_readonly("dim_R", [](const PyADR& s) { return s.pack->ctx->dimR; })
        .def_property_readonly("dim_rad_R", [](const PyADR& s) { return s.pack->ctx->radR.dim(); })
        .def_property_readonly("labels",
                               [](const PyADR& s) {
                                   py::list out;
                                   for (const auto& l : s.pack->ctx->labels)
                                       out.append(py::make_tuple(l.i, l.j));
                                   return out;
                               })
        .def("report", [](const PyADR& s) { return json_to_py(adr_json(*s.pack->ctx)); })
        .def("standards_report",
             [](const PyADR& s) { return json_to_py(standards_json(*s.pack->ctx, s.pack->fam)); })
        .def("hom_G",
             [](const PyADR& s, const PyModule& m) {
                 return PyRModule{s.pack, s.pack->ctx->hom_G(m.rep).mod};
             },
             py::arg("module"))
        .def("projective_R",
             [](const PyADR& s, int i, int j) {
                 return PyRModule{s.pack,
                                  s.pack->ctx->projective_R(s.pack->ctx->label_index(i, j)).mod};
             },
             py::arg("i"), py::arg("j"))
        .def("standard",
             [](const PyADR& s, int i, int j) {
                 return PyRModule{s.pack, s.pack->fam.delta(s.pack->ctx->label_index(i, j))};
             },
             py::arg("i"), py::arg("j"))
        .def("filtration",
             [](const PyADR& s, const PyRModule& m) {
                 auto filt = delta_ss_filtration(s.pack->fam, m.mod);
                 return json_to_py(filtration_json(*s.pack->ctx, m.mod, filt));
             },
             py::arg("rmodule"))
        .def("approximate",
             [](const PyADR& s, const PyModule& m) {
                 auto res = approx_general(*s.pack->ctx, m.rep);
                 return json_to_py(approx_json(*s.pack->ctx, m.rep, res));
             },
             py::arg("module"))
        .def("resolve",
             [](const PyADR& s, const PyRModule& m, int max_steps) {
                 auto rep = minimal_resolution_R(*s.pack->ctx, m.mod, max_steps);
                 return json_to_py(resolution_json(*s.pack->ctx, m.mod, rep));
             },
             py::arg("rmodule"), py::arg("max_steps") = 32)
        .def("ext_table",
             [](const PyADR& s) {
                 return json_to_py(ext_json(*s.pack->ctx, ext1_support(*s.pack->ctx)));
             })
        .def("verify_socle_correspondence",
             [](const PyADR& s, const PyModule& m) {
                 auto rep = verify_socle_correspondence(s.pack->fam, m.rep);
                 py::dict out;
                 out["ok"] = rep.ok;
                 out["loewy_length"] = rep.loewy_length;
                 out["delta_ss_length"] = rep.delta_ss_length;
                 out["violations"] = rep.violations;
                 return out;
             },
             py::arg("module"));

    py::class_<PyAlgebra>(m, "Algebra")
        .def_property_readonly("dim", [](const PyAlgebra& s) { return s.alg->dim; })
        .def_property_readonly("loewy_length",
                               [](const PyAlgebra& s) { return s.alg->loewy_length; })
        .def_property_readonly("vertices", [](const PyAlgebra& s) { return s.alg->quiver.nv; })
        .def_property_readonly("field", [](const PyAlgebra& s) { return s.alg->field.str(); })
        .def("report", [](const PyAlgebra& s) { return json_to_py(algebra_json(*s.alg)); })
        .def("projective",
             [](PyAlgebra& s, int i) { return PyModule{projective(s.alg, i - 1)}; }, py::arg("i"))
        .def("simple", [](PyAlgebra& s, int i) { return PyModule{simple(s.alg, i - 1)}; },
             py::arg("i"))
        .def("module", &eval_on, py::arg("expr"),
             "evaluate a module expression such as 'quot_soc(P(1),6)' or 'homG(rad^1(P(3)))'")
        .def("adr", [](PyAlgebra& s) { return PyADR{s.context()}; })
        .def("__repr__", [](const PyAlgebra& s) {
            return "<Algebra " + s.alg->name + " dim " + std::to_string(s.alg->dim) + ">";
        });

    m.def(
        "algebra_from_text",
        [](const std::string& text, const std::map<std::string, long>& params) {
            return make_algebra(text, params);
        },
        py::arg("text"), py::arg("params") = std::map<std::string, long>{});

    m.def(
        "counterexample",
        [](long n, int max_steps) {
            return json_to_py(counterexample_json(counterexample_driver(n, max_steps)));
        },
        py::arg("n") = 5, py::arg("max_steps") = 32);

    m.def(
        "corpus", [](uint64_t seed) { return json_to_py(corpus_json(make_corpus(seed))); },
        py::arg("seed") = 1);
}
