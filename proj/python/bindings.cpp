#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "stampgate/error.hpp"
#include "stampgate/filter_redirect.hpp"
#include "stampgate/metrics.hpp"
#include "stampgate/netsim.hpp"
#include "stampgate/report_io.hpp"
#include "stampgate/scenario.hpp"
#include "stampgate/stamp_engine.hpp"

namespace py = pybind11;
using namespace stampgate;

namespace {

Scenario checked(const std::string& json_text) {
    auto sc = parse_scenario(json_text);
    const auto problems = validate_scenario(sc);
    if (!problems.empty()) {
        std::string msg;
        for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
        throw Error(Errc::ConfigInvalid, msg);
    }
    return sc;
}

// Same pipeline as `stampgate run`, minus the files.
std::string run(const std::string& json_text, std::optional<std::uint64_t> seed) {
    auto sc = checked(json_text);
    if (seed) sc.seed = *seed;
    py::gil_scoped_release unlocked;
    const auto report = simulate(sc);
    std::optional<SimReport> full_check;
    if (report.acc_attack.processed > 0 && !sc.engine.force_full_check) {
        auto paired = sc;
        paired.engine.force_full_check = true;
        paired.trace = false;
        full_check = simulate(paired);
    }
    const auto table = compare(report, efficiency_params(report), full_check ? &*full_check : nullptr);
    return report_to_json(report, &table);
}

PacketHeader header_of(std::uint64_t plan_id, std::uint32_t seq, std::uint32_t payload_len, std::uint32_t source,
                       std::uint16_t dest, bool control) {
    PacketHeader h;
    h.plan_id = plan_id;
    h.seq = seq;
    h.payload_len = payload_len;
    h.source = SourceAddr{source};
    h.dest = EndpointId{dest};
    h.kind = control ? PacketKind::Control : PacketKind::Data;
    return h;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-channel gateway simulator";

    // Leaked on purpose: the type must outlive module teardown.
    static py::handle error_type = (new py::exception<Error>(m, "StampgateError", PyExc_ValueError))->ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = error_type(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    m.def("validate", [](const std::string& json_text) { return validate_scenario(parse_scenario(json_text)); },
          py::arg("scenario_json"),
          "Diagnostics for a scenario; an empty list means it can run. Syntax errors raise.");
    m.def("run", &run, py::arg("scenario_json"), py::arg("seed") = py::none(),
          "Simulate a scenario and return report.json text including the comparison table.");
    m.def("normalize", [](const std::string& json_text) { return scenario_to_json(parse_scenario(json_text)); },
          py::arg("scenario_json"), "Scenario JSON with every default filled in.");

    m.def("block_duration", &block_duration, py::arg("t_fixed"), py::arg("c"), py::arg("n"));
    m.def("capacity", &capacity, py::arg("s"), py::arg("p"));
    m.def(
        "predict_stamp_savings",
        [](std::uint64_t n_mal, Units t_c, Units t_d) {
            const auto s = predict_stamp_savings(n_mal, t_c, t_d);
            py::dict d;
            d["T_prime"] = s.T_prime;
            d["T_double_prime"] = s.T_double_prime;
            d["T_saved"] = s.T_saved;
            return d;
        },
        py::arg("n_mal"), py::arg("t_c"), py::arg("t_d"));
    m.def("signature_checksum", &signature_checksum, py::arg("issuer"), py::arg("serial"));
    m.def(
        "header_bytes",
        [](std::uint64_t plan_id, std::uint32_t seq, std::uint32_t payload_len, std::uint32_t source,
           std::uint16_t dest, bool control) {
            const auto b = canonical_header_bytes(header_of(plan_id, seq, payload_len, source, dest, control));
            return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
        },
        py::arg("plan_id"), py::arg("seq"), py::arg("payload_len"), py::arg("source"), py::arg("dest"),
        py::arg("control") = false);
    m.def(
        "header_digest",
        [](std::uint64_t plan_id, std::uint32_t seq, std::uint32_t payload_len, std::uint32_t source,
           std::uint16_t dest, bool control) {
            const auto d = header_digest(header_of(plan_id, seq, payload_len, source, dest, control));
            return py::bytes(reinterpret_cast<const char*>(d.data()), d.size());
        },
        py::arg("plan_id"), py::arg("seq"), py::arg("payload_len"), py::arg("source"), py::arg("dest"),
        py::arg("control") = false);
}
