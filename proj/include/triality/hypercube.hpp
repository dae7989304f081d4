#pragma once

#include "triality/linear.hpp"

#include "json.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace triality {

/// The 4-cube with vertices ½(±e1±e2±e3±e4) and 3-cells ±e_i.
/// Cells are labelled A, B, C, D for +e1..+e4 and Abar..Dbar for the
/// negatives; vertices carry the labels 1..8 and 1bar..8bar of the
/// classical picture.
struct HypercubeModel {
    std::vector<std::string> cell_labels;         // 8, order A, Abar, B, Bbar, ...
    std::vector<Vector4> cells;                   // the matching ±e_i
    std::vector<std::string> vertex_labels;       // 16
    std::vector<Vector4> vertices;                // matching section vectors
    std::vector<std::vector<int>> vertex_cells;   // cells containing each vertex
    std::vector<std::vector<int>> edges;          // adjacency lists
    std::vector<int> vertex_class;                // 0 = class X, 1 = class Y
    /// Cell -> the four vertices of class X (resp. Y) lying in it.
    std::vector<std::vector<int>> cell_x_vertices;
    std::vector<std::vector<int>> cell_y_vertices;
    /// Vertex -> the four adjacent vertices of the other class.
    std::vector<std::vector<int>> vertex_opposite_neighbours;
    /// Which class matches the class-1 half for the reference {e1..e4}.
    char class_one_is = '?';

    int vertex_index(const std::string& label) const;
    int cell_index(const std::string& label) const;
    std::vector<std::string> vertex_names(const std::vector<int>& idx) const;
    std::vector<std::string> cell_names(const std::vector<int>& idx) const;
};

HypercubeModel hypercube_model();

/// The classical identification tables, transcribed verbatim.
struct HypercubeTables {
    std::map<std::string, std::array<std::string, 4>> vertex_cells;
    std::map<std::string, std::array<std::string, 4>> cell_x;
    std::map<std::string, std::array<std::string, 4>> cell_y;
    std::map<std::string, std::array<std::string, 4>> vertex_neighbours;
    std::vector<std::string> class_x;
    std::vector<std::string> class_y;
};

const HypercubeTables& hypercube_reference_tables();

/// Compares the computed model with the transcribed tables; returns the
/// list of mismatches (empty on success).
std::vector<std::string> check_hypercube_tables(const HypercubeModel& h);

nlohmann::json hypercube_to_json(const HypercubeModel& h);

}  // namespace triality
