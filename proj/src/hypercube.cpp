#include "triality/hypercube.hpp"

#include "triality/gamma_sets.hpp"
#include "triality/triality_model.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace triality {

namespace {

const char* const kCellNames[8] = {"A", "Abar", "B", "Bbar", "C", "Cbar", "D", "Dbar"};

HypercubeTables build_tables() {
    HypercubeTables t;
    // Vertex -> the four cells meeting in it.
    t.vertex_cells = {
        {"1", {"A", "Bbar", "C", "D"}},          {"1bar", {"Abar", "B", "Cbar", "Dbar"}},
        {"2", {"A", "Bbar", "Cbar", "D"}},       {"2bar", {"Abar", "B", "C", "Dbar"}},
        {"3", {"A", "B", "Cbar", "D"}},          {"3bar", {"Abar", "Bbar", "C", "Dbar"}},
        {"4", {"A", "B", "C", "D"}},             {"4bar", {"Abar", "Bbar", "Cbar", "Dbar"}},
        {"5", {"Abar", "B", "C", "D"}},          {"5bar", {"A", "Bbar", "Cbar", "Dbar"}},
        {"6", {"Abar", "B", "Cbar", "D"}},       {"6bar", {"A", "Bbar", "C", "Dbar"}},
        {"7", {"Abar", "Bbar", "Cbar", "D"}},    {"7bar", {"A", "B", "C", "Dbar"}},
        {"8", {"Abar", "Bbar", "C", "D"}},       {"8bar", {"A", "B", "Cbar", "Dbar"}},
    };
    // Cell -> vertices of X on it, and of Y on it.
    t.cell_x = {
        {"A", {"1", "3", "5bar", "7bar"}},       {"Abar", {"1bar", "3bar", "5", "7"}},
        {"B", {"1bar", "3", "5", "7bar"}},       {"Bbar", {"1", "3bar", "5bar", "7"}},
        {"C", {"1", "3bar", "5", "7bar"}},       {"Cbar", {"1bar", "3", "5bar", "7"}},
        {"D", {"1", "3", "5", "7"}},             {"Dbar", {"1bar", "3bar", "5bar", "7bar"}},
    };
    t.cell_y = {
        {"A", {"2", "4", "6bar", "8bar"}},       {"Abar", {"2bar", "4bar", "6", "8"}},
        {"B", {"2bar", "4", "6", "8bar"}},       {"Bbar", {"2", "4bar", "6bar", "8"}},
        {"C", {"2bar", "4", "6bar", "8"}},       {"Cbar", {"2", "4bar", "6", "8bar"}},
        {"D", {"2", "4", "6", "8"}},             {"Dbar", {"2bar", "4bar", "6bar", "8bar"}},
    };
    // Vertex -> the four adjacent vertices of the other class.
    t.vertex_neighbours = {
        {"1", {"2", "4", "6bar", "8"}},          {"1bar", {"2bar", "4bar", "6", "8bar"}},
        {"3", {"2", "4", "6", "8bar"}},          {"3bar", {"2bar", "4bar", "6bar", "8"}},
        {"5", {"2bar", "4", "6", "8"}},          {"5bar", {"2", "4bar", "6bar", "8bar"}},
        {"7", {"2", "4bar", "6", "8"}},          {"7bar", {"2bar", "4", "6bar", "8bar"}},
        {"2", {"1", "3", "5bar", "7"}},          {"2bar", {"1bar", "3bar", "5", "7bar"}},
        {"4", {"1", "3", "5", "7bar"}},          {"4bar", {"1bar", "3bar", "5bar", "7"}},
        {"6", {"1bar", "3", "5", "7"}},          {"6bar", {"1", "3bar", "5bar", "7bar"}},
        {"8", {"1", "3bar", "5", "7"}},          {"8bar", {"1bar", "3", "5bar", "7bar"}},
    };
    t.class_x = {"1", "1bar", "3", "3bar", "5", "5bar", "7", "7bar"};
    t.class_y = {"2", "2bar", "4", "4bar", "6", "6bar", "8", "8bar"};
    return t;
}

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

template <class Arr>
std::set<std::string> as_set(const Arr& a) {
    return {a.begin(), a.end()};
}

}  // namespace

const HypercubeTables& hypercube_reference_tables() {
    static const HypercubeTables tables = build_tables();
    return tables;
}

int HypercubeModel::vertex_index(const std::string& label) const {
    auto it = std::find(vertex_labels.begin(), vertex_labels.end(), label);
    if (it == vertex_labels.end()) throw std::out_of_range("unknown vertex " + label);
    return static_cast<int>(it - vertex_labels.begin());
}

int HypercubeModel::cell_index(const std::string& label) const {
    auto it = std::find(cell_labels.begin(), cell_labels.end(), label);
    if (it == cell_labels.end()) throw std::out_of_range("unknown cell " + label);
    return static_cast<int>(it - cell_labels.begin());
}

std::vector<std::string> HypercubeModel::vertex_names(const std::vector<int>& idx) const {
    std::vector<std::string> out;
    for (int i : idx) out.push_back(vertex_labels[i]);
    return out;
}

std::vector<std::string> HypercubeModel::cell_names(const std::vector<int>& idx) const {
    std::vector<std::string> out;
    for (int i : idx) out.push_back(cell_labels[i]);
    return out;
}

HypercubeModel hypercube_model() {
    HypercubeModel h;
    for (int k = 0; k < 8; ++k) {
        h.cell_labels.push_back(kCellNames[k]);
        Vector4 e = Vector4::basis(k / 2);
        h.cells.push_back(k % 2 ? -e : e);
    }

    // A vertex is named by the cells it lies in: its section vector is half
    // the sum of those cells.
    const auto& tab = hypercube_reference_tables();
    for (const auto& [name, cells] : tab.vertex_cells) {
        h.vertex_labels.push_back(name);
        Vector4 v;
        for (const auto& c : cells) v = v + h.cells[h.cell_index(c)];
        h.vertices.push_back(v * Rational(1, 2));
    }

    const int nv = static_cast<int>(h.vertices.size());
    for (int v = 0; v < nv; ++v) {
        std::vector<int> in;
        for (int c = 0; c < 8; ++c)
            if (h.vertices[v].dot(h.cells[c]) > 0) in.push_back(c);
        h.vertex_cells.push_back(in);
    }

    h.edges.assign(nv, {});
    for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b) {
            int diff = 0;
            for (int i = 0; i < 4; ++i)
                if (h.vertices[a].c[i] != h.vertices[b].c[i]) ++diff;
            if (diff == 1) h.edges[a].push_back(b);
        }

    // Path-parity classes, grown from vertex 1.
    h.vertex_class.assign(nv, -1);
    int start = h.vertex_index("1");
    h.vertex_class[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (int b : h.edges[a])
            if (h.vertex_class[b] < 0) {
                h.vertex_class[b] = 1 - h.vertex_class[a];
                queue.push_back(b);
            }
    }

    for (int c = 0; c < 8; ++c) {
        std::vector<int> xs, ys;
        for (int v = 0; v < nv; ++v)
            if (h.vertices[v].dot(h.cells[c]) > 0) (h.vertex_class[v] == 0 ? xs : ys).push_back(v);
        h.cell_x_vertices.push_back(xs);
        h.cell_y_vertices.push_back(ys);
    }
    for (int v = 0; v < nv; ++v) {
        std::vector<int> nb;
        for (int b : h.edges[v])
            if (h.vertex_class[b] != h.vertex_class[v]) nb.push_back(b);
        h.vertex_opposite_neighbours.push_back(nb);
    }

    // Compare with the class-1 half of the standard oriented model.
    OrientedModel z = standard_model({});
    auto halves = split_spinor(z.covering(), z.orientation());
    Vector4 probe = section_vector(z, halves.first.members.front());
    int pv = static_cast<int>(std::find(h.vertices.begin(), h.vertices.end(), probe) - h.vertices.begin());
    h.class_one_is = h.vertex_class[pv] == 0 ? 'X' : 'Y';
    return h;
}

std::vector<std::string> check_hypercube_tables(const HypercubeModel& h) {
    std::vector<std::string> bad;
    const auto& t = hypercube_reference_tables();
    for (const auto& [v, cells] : t.vertex_cells)
        if (as_set(h.cell_names(h.vertex_cells[h.vertex_index(v)])) != as_set(cells)) bad.push_back("vertex cells of " + v);
    for (const auto& [c, xs] : t.cell_x)
        if (as_set(h.vertex_names(h.cell_x_vertices[h.cell_index(c)])) != as_set(xs)) bad.push_back("X vertices of cell " + c);
    for (const auto& [c, ys] : t.cell_y)
        if (as_set(h.vertex_names(h.cell_y_vertices[h.cell_index(c)])) != as_set(ys)) bad.push_back("Y vertices of cell " + c);
    for (const auto& [v, nb] : t.vertex_neighbours)
        if (as_set(h.vertex_names(h.vertex_opposite_neighbours[h.vertex_index(v)])) != as_set(nb))
            bad.push_back("neighbours of vertex " + v);
    std::vector<std::string> xs, ys;
    for (std::size_t v = 0; v < h.vertices.size(); ++v) (h.vertex_class[v] == 0 ? xs : ys).push_back(h.vertex_labels[v]);
    if (as_set(xs) != as_set(t.class_x)) bad.push_back("class X");
    if (as_set(ys) != as_set(t.class_y)) bad.push_back("class Y");
    for (const auto& cells : h.vertex_cells)
        if (cells.size() != 4) bad.push_back("a vertex does not lie in exactly four cells");
    return bad;
}

nlohmann::json hypercube_to_json(const HypercubeModel& h) {
    using nlohmann::json;
    json j;
    j["cells"] = json::array();
    for (std::size_t c = 0; c < h.cells.size(); ++c) {
        json coords = json::array();
        for (const auto& x : h.cells[c].c) coords.push_back(to_string(x));
        j["cells"].push_back({{"label", h.cell_labels[c]}, {"vector", coords}});
    }
    j["vertices"] = json::array();
    for (std::size_t v = 0; v < h.vertices.size(); ++v) {
        json coords = json::array();
        for (const auto& x : h.vertices[v].c) coords.push_back(to_string(x));
        j["vertices"].push_back({{"label", h.vertex_labels[v]},
                                 {"vector", coords},
                                 {"class", h.vertex_class[v] == 0 ? "X" : "Y"},
                                 {"cells", h.cell_names(h.vertex_cells[v])},
                                 {"opposite_neighbours", h.vertex_names(h.vertex_opposite_neighbours[v])}});
    }
    json ids = json::object();
    for (std::size_t c = 0; c < h.cells.size(); ++c)
        ids[h.cell_labels[c]] = {{"X", h.vertex_names(h.cell_x_vertices[c])}, {"Y", h.vertex_names(h.cell_y_vertices[c])}};
    j["cell_identifications"] = ids;
    j["class_one"] = std::string(1, h.class_one_is);
    return j;
}

}  // namespace triality
