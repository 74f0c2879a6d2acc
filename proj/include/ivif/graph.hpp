#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ivif/interval.hpp"
#include "ivif/matrix.hpp"

namespace ivif {

/// One undirected edge between 1-based node ids, rated by how crowded and
/// how lonely the link is. The two intervals together must form a valid
/// Value.
struct Edge {
    std::size_t u;
    std::size_t v;
    UnitInterval crowdness;
    UnitInterval loneliness;
};

/// An undirected rated network over nodes 1..node_count. Construction
/// validates every edge: ids in range, no self-loops, no duplicate pairs
/// (regardless of orientation), interval pairs that form valid Values.
class GraphSpec {
public:
    GraphSpec(std::size_t node_count, std::vector<Edge> edges, std::string label = "");

    std::size_t node_count() const noexcept { return node_count_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::string& label() const noexcept { return label_; }

private:
    std::size_t node_count_;
    std::vector<Edge> edges_;
    std::string label_;
};

/// Parse the edge-list format:
///
///   # comment
///   n=6
///   u,v,mu_lo,mu_hi,nu_lo,nu_hi
///   1,2,0.1,0.3,0.2,0.5
///
/// Blank lines and '#' comments may appear anywhere. The first significant
/// line is the node count, the second is the fixed header, the rest are
/// edges. Syntax problems raise ParseError with the 1-based line number;
/// semantic problems raise ValidationError.
GraphSpec parse_graph(std::string_view text);

/// The adjacency matrix of the network: entry (u, v) holds the edge's value
/// in both orientations, the diagonal and absent edges hold full
/// non-membership <[0,0],[1,1]>.
Matrix build_matrix(const GraphSpec& g);

} // namespace ivif
