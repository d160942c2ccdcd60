#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gazebench/idt.hpp"
#include "gazebench/image_io.hpp"
#include "gazebench/metrics.hpp"
#include "gazebench/saliency_io.hpp"
#include "gazebench/samplers.hpp"
#include "gazebench/scanpath_io.hpp"
#include "gazebench/types.hpp"

namespace py = pybind11;
using namespace gazebench;

namespace {

Scanpath make_scanpath(const std::string& stimulus_id,
                       const std::vector<std::pair<double, double>>& points,
                       double duration_ms) {
    Scanpath sp;
    sp.stimulus_id = stimulus_id;
    double onset = 0.0;
    for (auto [x, y] : points) {
        sp.fixations.push_back({x, y, duration_ms, onset});
        onset += duration_ms;
    }
    return sp;
}

SaliencyMap make_map(int width, int height, const std::vector<double>& values,
                     std::optional<double> duration_bin_s) {
    SaliencyMap m;
    m.width = width;
    m.height = height;
    m.values = values;
    m.duration_bin_s = duration_bin_s;
    m.validate();
    return m;
}

} // namespace

PYBIND11_MODULE(_gazebench, m) {
    m.doc() = "Scanpath generation and comparison toolkit";

    py::register_exception<Error>(m, "GazebenchError", PyExc_RuntimeError);

    py::class_<Fixation>(m, "Fixation")
        .def(py::init<>())
        .def(py::init([](double x, double y, double duration_ms, double onset_ms) {
                 return Fixation{x, y, duration_ms, onset_ms};
             }),
             py::arg("x"), py::arg("y"), py::arg("duration_ms") = 0.0, py::arg("onset_ms") = 0.0)
        .def_readwrite("x", &Fixation::x)
        .def_readwrite("y", &Fixation::y)
        .def_readwrite("duration_ms", &Fixation::duration_ms)
        .def_readwrite("onset_ms", &Fixation::onset_ms)
        .def("__repr__", [](const Fixation& f) {
            return "Fixation(x=" + std::to_string(f.x) + ", y=" + std::to_string(f.y) + ")";
        });

    py::class_<Scanpath>(m, "Scanpath")
        .def(py::init(&make_scanpath), py::arg("stimulus_id"), py::arg("points"),
             py::arg("duration_ms") = 250.0)
        .def_readwrite("stimulus_id", &Scanpath::stimulus_id)
        .def_readwrite("participant_id", &Scanpath::participant_id)
        .def_readwrite("generator", &Scanpath::generator)
        .def_readwrite("fixations", &Scanpath::fixations)
        .def("__len__", &Scanpath::size)
        .def("points", [](const Scanpath& sp) {
            std::vector<std::pair<double, double>> out;
            for (const auto& f : sp.fixations) out.emplace_back(f.x, f.y);
            return out;
        })
        .def("to_json", &scanpath_to_json);

    py::class_<SaliencyMap>(m, "SaliencyMap")
        .def(py::init(&make_map), py::arg("width"), py::arg("height"), py::arg("values"),
             py::arg("duration_bin_s") = std::nullopt)
        .def_readonly("width", &SaliencyMap::width)
        .def_readonly("height", &SaliencyMap::height)
        .def_readonly("values", &SaliencyMap::values)
        .def_readwrite("duration_bin_s", &SaliencyMap::duration_bin_s)
        .def("total_mass", &SaliencyMap::total_mass);

    py::class_<MetricParams>(m, "MetricParams")
        .def(py::init<>())
        .def(py::init([](double rho, int l_min) { return MetricParams{rho, l_min}; }),
             py::arg("rho") = 0.04, py::arg("l_min") = 2)
        .def_readwrite("rho", &MetricParams::rho)
        .def_readwrite("l_min", &MetricParams::l_min);

    py::class_<RecurrenceMatrix>(m, "RecurrenceMatrix")
        .def_readonly("n", &RecurrenceMatrix::n)
        .def_readonly("rho", &RecurrenceMatrix::rho)
        .def("at", &RecurrenceMatrix::at, py::arg("i"), py::arg("j"))
        .def("recurrent_count", &RecurrenceMatrix::recurrent_count);

    py::class_<SamplerConfig>(m, "SamplerConfig")
        .def(py::init<>())
        .def_readwrite("n_fixations", &SamplerConfig::n_fixations)
        .def_readwrite("seed", &SamplerConfig::seed)
        .def_readwrite("mean_fix_dur_ms", &SamplerConfig::mean_fix_dur_ms)
        .def_readwrite("gaussian_weight", &SamplerConfig::gaussian_weight)
        .def_readwrite("sigma_loc", &SamplerConfig::sigma_loc)
        .def_readwrite("ior_lambda", &SamplerConfig::ior_lambda)
        .def_readwrite("ior_beta", &SamplerConfig::ior_beta)
        .def_readwrite("ior_sigma", &SamplerConfig::ior_sigma);

    py::class_<IdtParams>(m, "IdtParams")
        .def(py::init<>())
        .def_readwrite("dispersion_max", &IdtParams::dispersion_max)
        .def_readwrite("duration_min_ms", &IdtParams::duration_min_ms)
        .def_readwrite("blink_bridge_max_ms", &IdtParams::blink_bridge_max_ms);

    m.def("normalize_point", &normalize_point, py::arg("px"), py::arg("py"), py::arg("width"),
          py::arg("height"));
    m.def("denormalize_point", &denormalize_point, py::arg("nx"), py::arg("ny"), py::arg("width"),
          py::arg("height"));

    m.def("dtw", &dtw, py::arg("a"), py::arg("b"),
          "Unnormalized dynamic-time-warping cost between two scanpaths");
    m.def("eyenalysis", &eyenalysis, py::arg("a"), py::arg("b"),
          "Mean double-mapped nearest-neighbor distance");
    m.def("cross_recurrence", &cross_recurrence, py::arg("a"), py::arg("b"),
          py::arg("params") = MetricParams{});
    m.def("determinism", &determinism, py::arg("matrix"), py::arg("l_min") = 2);
    m.def("laminarity", &laminarity, py::arg("matrix"), py::arg("l_min") = 2);

    m.def("sample_probabilistic", &sample_probabilistic, py::arg("maps"), py::arg("config"));
    m.def("sample_ior", &sample_ior, py::arg("map"), py::arg("config"));
    m.def("sample_center_baseline", &sample_center_baseline, py::arg("width"), py::arg("height"),
          py::arg("config"));

    m.def(
        "detect_fixations",
        [](const std::vector<std::tuple<double, double, double, bool>>& samples,
           const std::string& stimulus_id, const IdtParams& params) {
            TrialSamples trial;
            trial.stimulus_id = stimulus_id;
            for (const auto& [t, x, y, valid] : samples) trial.samples.push_back({t, x, y, valid});
            return detect_fixations(trial, params);
        },
        py::arg("samples"), py::arg("stimulus_id") = "stimulus", py::arg("params") = IdtParams{},
        "I-DT fixation detection over (timestamp_ms, x, y, valid) tuples");
    m.def("truncate_scanpath", &truncate_scanpath, py::arg("path"), py::arg("n"));

    m.def("load_saliency_map", &load_grayscale, py::arg("path"),
          "Load an 8/16-bit grayscale PNG or P2/P5 PGM, rescaled to [0,1]");
}
