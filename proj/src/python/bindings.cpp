#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cmdviz/cluster.hpp"
#include "cmdviz/encode.hpp"
#include "cmdviz/errors.hpp"
#include "cmdviz/group.hpp"
#include "cmdviz/ingest.hpp"
#include "cmdviz/model.hpp"
#include "cmdviz/pipeline.hpp"
#include "cmdviz/reduce.hpp"
#include "cmdviz/render.hpp"
#include "cmdviz/serialize.hpp"
#include "cmdviz/synth.hpp"

namespace py = pybind11;
using namespace cmdviz;

PYBIND11_MODULE(_cmdviz, m) {
    m.doc() = "Cognitive Move Diagram toolkit";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

    py::enum_<Method>(m, "Method")
        .value("agglomerative", Method::Agglomerative)
        .value("kmeans", Method::KMeans);
    py::enum_<Linkage>(m, "Linkage")
        .value("single", Linkage::Single)
        .value("complete", Linkage::Complete)
        .value("average", Linkage::Average);
    py::enum_<Metric>(m, "Metric")
        .value("euclidean", Metric::Euclidean)
        .value("manhattan", Metric::Manhattan);
    py::enum_<ReduceMode>(m, "ReduceMode")
        .value("auto", ReduceMode::Auto)
        .value("none", ReduceMode::None)
        .value("pca", ReduceMode::Pca);

    py::class_<Step>(m, "Step")
        .def(py::init<>())
        .def_readwrite("index", &Step::index)
        .def_readwrite("independent_values", &Step::independent_values)
        .def_readwrite("measurements", &Step::measurements);

    py::class_<Experiment>(m, "Experiment")
        .def_static("make", &Experiment::make, py::arg("agents"), py::arg("outcomes"),
                    py::arg("independents"), py::arg("steps"))
        .def_property_readonly("agents", &Experiment::agents)
        .def_property_readonly("outcomes", &Experiment::outcomes)
        .def_property_readonly("independents", &Experiment::independents)
        .def_property_readonly("steps", &Experiment::steps)
        .def_property_readonly("num_agents", &Experiment::num_agents)
        .def_property_readonly("num_outcomes", &Experiment::num_outcomes)
        .def_property_readonly("num_steps", &Experiment::num_steps)
        .def("__eq__", [](const Experiment& a, const Experiment& b) { return a == b; });

    py::class_<AgentState>(m, "AgentState")
        .def_readonly("agent_index", &AgentState::agent_index)
        .def_readonly("step_index", &AgentState::step_index)
        .def_readonly("values", &AgentState::values);

    py::class_<AgentMove>(m, "AgentMove")
        .def_readonly("agent_index", &AgentMove::agent_index)
        .def_readonly("from_step", &AgentMove::from_step)
        .def_readonly("to_step", &AgentMove::to_step)
        .def_readonly("from_values", &AgentMove::from_values)
        .def_readonly("to_values", &AgentMove::to_values);

    py::class_<ClusterConfig>(m, "ClusterConfig")
        .def(py::init<>())
        .def_readwrite("method", &ClusterConfig::method)
        .def_readwrite("linkage", &ClusterConfig::linkage)
        .def_readwrite("threshold", &ClusterConfig::threshold)
        .def_readwrite("k", &ClusterConfig::k)
        .def_readwrite("metric", &ClusterConfig::metric)
        .def_readwrite("seed", &ClusterConfig::seed)
        .def_readwrite("max_iterations", &ClusterConfig::max_iterations);

    py::class_<Cluster>(m, "Cluster")
        .def_readonly("members", &Cluster::members)
        .def_readonly("centroid", &Cluster::centroid);

    py::class_<ClusterPartition>(m, "ClusterPartition")
        .def_readonly("step_index", &ClusterPartition::step_index)
        .def_readonly("assignments", &ClusterPartition::assignments)
        .def_readonly("clusters", &ClusterPartition::clusters);

    py::class_<GroupState>(m, "GroupState")
        .def_readonly("step_index", &GroupState::step_index)
        .def_readonly("matrix", &GroupState::matrix)
        .def_readonly("partition", &GroupState::partition);

    py::class_<GroupMove>(m, "GroupMove")
        .def_readonly("agent_index", &GroupMove::agent_index)
        .def_readonly("from_step", &GroupMove::from_step)
        .def_readonly("to_step", &GroupMove::to_step)
        .def_readonly("from_row", &GroupMove::from_row)
        .def_readonly("to_row", &GroupMove::to_row)
        .def_readonly("from_membership", &GroupMove::from_membership)
        .def_readonly("to_membership", &GroupMove::to_membership);

    py::class_<PcaModel>(m, "PcaModel")
        .def_readonly("mean", &PcaModel::mean)
        .def_readonly("components", &PcaModel::components)
        .def_readonly("explained_variance", &PcaModel::explained_variance)
        .def_readonly("zero_variance", &PcaModel::zero_variance);

    py::class_<NodeStyle>(m, "NodeStyle")
        .def_readonly("intensity", &NodeStyle::intensity)
        .def_readonly("border_weight", &NodeStyle::border_weight);

    py::class_<DiagramNode>(m, "DiagramNode")
        .def_readonly("id", &DiagramNode::id)
        .def_readonly("members", &DiagramNode::members)
        .def_readonly("centroid", &DiagramNode::centroid)
        .def_readonly("label", &DiagramNode::label)
        .def_readonly("size", &DiagramNode::size)
        .def_readonly("style", &DiagramNode::style);

    py::class_<DiagramColumn>(m, "DiagramColumn")
        .def_readonly("step_index", &DiagramColumn::step_index)
        .def_readonly("independent_values", &DiagramColumn::independent_values)
        .def_readonly("nodes", &DiagramColumn::nodes);

    py::class_<DiagramEdge>(m, "DiagramEdge")
        .def_readonly("from_step", &DiagramEdge::from_step)
        .def_readonly("from_node", &DiagramEdge::from_node)
        .def_readonly("to_node", &DiagramEdge::to_node)
        .def_readonly("agent_count", &DiagramEdge::agent_count);

    py::class_<DiagramModel>(m, "DiagramModel")
        .def_readonly("scheme", &DiagramModel::scheme)
        .def_readonly("columns", &DiagramModel::columns)
        .def_readonly("edges", &DiagramModel::edges)
        .def_readonly("axis_meta", &DiagramModel::axis_meta);

    py::class_<EncodeContext>(m, "EncodeContext")
        .def(py::init<>())
        .def_readwrite("independent_schedule", &EncodeContext::independent_schedule)
        .def_readwrite("axis_names", &EncodeContext::axis_names);

    py::class_<RenderConfig>(m, "RenderConfig")
        .def(py::init<>())
        .def_readwrite("width_px", &RenderConfig::width_px)
        .def_readwrite("height_px", &RenderConfig::height_px)
        .def_readwrite("font_size_pt", &RenderConfig::font_size_pt)
        .def_readwrite("palette", &RenderConfig::palette);

    py::class_<SynthSpec>(m, "SynthSpec")
        .def(py::init<>())
        .def_readwrite("num_agents", &SynthSpec::num_agents)
        .def_readwrite("num_outcomes", &SynthSpec::num_outcomes)
        .def_readwrite("num_steps", &SynthSpec::num_steps)
        .def_readwrite("planted_partitions", &SynthSpec::planted_partitions)
        .def_readwrite("cluster_centers", &SynthSpec::cluster_centers)
        .def_readwrite("noise_sigma", &SynthSpec::noise_sigma)
        .def_readwrite("seed", &SynthSpec::seed)
        .def_readwrite("independent_schedule", &SynthSpec::independent_schedule);

    py::class_<PipelineOptions>(m, "PipelineOptions")
        .def(py::init<>())
        .def_readwrite("cluster", &PipelineOptions::cluster)
        .def_readwrite("reduce", &PipelineOptions::reduce)
        .def_readwrite("components", &PipelineOptions::components)
        .def_readwrite("auto_limit", &PipelineOptions::auto_limit)
        .def_readwrite("scheme", &PipelineOptions::scheme)
        .def_readwrite("scheme3_edges", &PipelineOptions::scheme3_edges);

    py::class_<PipelineResult>(m, "PipelineResult")
        .def_readonly("pca", &PipelineResult::pca)
        .def_readonly("states", &PipelineResult::states)
        .def_readonly("partitions", &PipelineResult::partitions)
        .def_readonly("group_states", &PipelineResult::group_states)
        .def_readonly("diagram", &PipelineResult::diagram);

    m.def("agent_states", &agent_states, py::arg("experiment"), py::arg("t"));
    m.def("agent_moves", &agent_moves, py::arg("experiment"), py::arg("j"));

    m.def("parse_json", [](const std::string& text) {
        const IngestReport r = parse_json(text);
        return py::make_tuple(r.experiment, r.warnings);
    });
    m.def("parse_csv", [](const std::string& text) {
        const IngestReport r = parse_csv(text);
        return py::make_tuple(r.experiment, r.warnings);
    });
    m.def("write_json", &write_json);

    m.def("distance", &distance, py::arg("a"), py::arg("b"),
          py::arg("metric") = Metric::Euclidean);
    m.def("cluster_step", &cluster_step, py::arg("states"),
          py::arg("config") = ClusterConfig{});

    m.def("group_state", &group_state, py::arg("partition"), py::arg("states"));
    m.def("group_moves", &group_moves, py::arg("group_states"));
    m.def("transition_counts", &transition_counts, py::arg("from_state"), py::arg("to_state"));

    m.def("fit_pca", &fit_pca, py::arg("data"), py::arg("k"));
    m.def("project", &project, py::arg("model"), py::arg("data"));

    m.def("encode_scheme1", &encode_scheme1, py::arg("group_states"),
          py::arg("context") = EncodeContext{});
    m.def("encode_scheme2", &encode_scheme2, py::arg("group_states"),
          py::arg("context") = EncodeContext{});
    m.def("encode_scheme3", &encode_scheme3, py::arg("group_states"),
          py::arg("context") = EncodeContext{}, py::arg("draw_edges") = false);

    m.def("render_svg", &render_svg, py::arg("diagram"), py::arg("config") = RenderConfig{});
    m.def("render_dot", &render_dot, py::arg("diagram"));
    m.def("diagram_to_json", &diagram_to_json, py::arg("diagram"));

    m.def("generate", &generate, py::arg("spec"));
    m.def("run_pipeline", &run_pipeline, py::arg("experiment"),
          py::arg("options") = PipelineOptions{});
}
