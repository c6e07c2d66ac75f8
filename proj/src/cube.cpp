#include "hcube/cube.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hcube {

namespace {

void check_dimension(int n) {
  if (n < 0 || n > BitVec::kMaxBits)
    throw std::invalid_argument("dimension must be in [0, 128], got " +
                                std::to_string(n));
}

void check_coordinate(int i, int n) {
  if (i < 1 || i > n)
    throw std::invalid_argument("coordinate " + std::to_string(i) +
                                " out of range [1, " + std::to_string(n) + "]");
}

}  // namespace

HypercubeVertex::HypercubeVertex(int dimension) : dim_(dimension) {
  check_dimension(dimension);
}

HypercubeVertex::HypercubeVertex(int dimension, std::initializer_list<int> elements)
    : HypercubeVertex(dimension, std::vector<int>(elements)) {}

HypercubeVertex::HypercubeVertex(int dimension, const std::vector<int>& elements)
    : dim_(dimension) {
  check_dimension(dimension);
  for (int i : elements) {
    check_coordinate(i, dim_);
    bits_.set(i);
  }
}

HypercubeVertex::HypercubeVertex(int dimension, BitVec bits)
    : dim_(dimension), bits_(bits) {
  check_dimension(dimension);
  if (bits.max_element() > dimension)
    throw std::invalid_argument("bit vector has elements above the dimension");
}

HypercubeVertex HypercubeVertex::from_binary(std::string_view s) {
  HypercubeVertex v(static_cast<int>(s.size()));
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (s[i] == '1')
      v.bits_.set(i + 1);
    else if (s[i] != '0')
      throw std::invalid_argument("binary vertex string: bad character at position " +
                                  std::to_string(i + 1));
  }
  return v;
}

bool HypercubeVertex::contains(int i) const {
  check_coordinate(i, dim_);
  return bits_.test(i);
}

HypercubeVertex HypercubeVertex::with(int i) const {
  check_coordinate(i, dim_);
  HypercubeVertex v = *this;
  v.bits_.set(i);
  return v;
}

HypercubeVertex HypercubeVertex::without(int i) const {
  check_coordinate(i, dim_);
  HypercubeVertex v = *this;
  v.bits_.reset(i);
  return v;
}

HypercubeVertex HypercubeVertex::flipped(int i) const {
  check_coordinate(i, dim_);
  HypercubeVertex v = *this;
  v.bits_.flip(i);
  return v;
}

std::vector<int> HypercubeVertex::elements() const {
  std::vector<int> out;
  for (int i = bits_.next_element(0); i != 0; i = bits_.next_element(i))
    out.push_back(i);
  return out;
}

std::string HypercubeVertex::to_binary() const {
  std::string s(dim_, '0');
  for (int i = 1; i <= dim_; ++i)
    if (bits_.test(i)) s[i - 1] = '1';
  return s;
}

std::string HypercubeVertex::to_set_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

int HypercubeVertex::hamming(const HypercubeVertex& other) const {
  if (dim_ != other.dim_)
    throw std::invalid_argument("hamming: dimension mismatch (" +
                                std::to_string(dim_) + " vs " +
                                std::to_string(other.dim_) + ")");
  return (bits_ ^ other.bits_).count();
}

StarEdge::StarEdge(HypercubeVertex lower, int direction)
    : lower_(std::move(lower)), direction_(direction) {
  check_coordinate(direction, lower_.dimension());
  if (lower_.contains(direction))
    throw std::invalid_argument("star direction " + std::to_string(direction) +
                                " already lies in the lower endpoint");
}

StarEdge StarEdge::parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("star string: empty input");
  int star_pos = 0;
  std::vector<int> ones;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    switch (s[i]) {
      case '*':
        if (star_pos != 0)
          throw std::invalid_argument("star string: second star at position " +
                                      std::to_string(i + 1));
        star_pos = i + 1;
        break;
      case '1':
        ones.push_back(i + 1);
        break;
      case '0':
        break;
      default:
        throw std::invalid_argument("star string: bad character '" +
                                    std::string(1, s[i]) + "' at position " +
                                    std::to_string(i + 1));
    }
  }
  if (star_pos == 0) throw std::invalid_argument("star string: no star position");
  return StarEdge(HypercubeVertex(static_cast<int>(s.size()), ones), star_pos);
}

std::string StarEdge::star_string() const {
  std::string s = lower_.to_binary();
  s[direction_ - 1] = '*';
  return s;
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = n - i;
  return Permutation(std::move(im));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  inv_.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    int v = images_[i - 1];
    if (v < 1 || v > n || inv_[v - 1] != 0)
      throw std::invalid_argument("not a permutation of [n]");
    inv_[v - 1] = i;
  }
}

int prefix_color(const StarEdge& e) {
  int pre = 0, suf = 0;
  for (int i = 1; i <= e.dimension(); ++i) {
    if (!e.lower().contains(i)) continue;
    (i < e.direction() ? pre : suf) += 1;
  }
  return ((pre - suf) % 3 + 3) % 3;
}

int prefix_color_permuted(const StarEdge& e, const Permutation& pi) {
  if (pi.size() != e.dimension())
    throw std::invalid_argument("permutation size does not match edge dimension");
  // Position i of the permuted string carries coordinate pi(i).
  int pre = 0, suf = 0;
  const int star_at = pi.inverse(e.direction());
  for (int i = 1; i <= pi.size(); ++i) {
    if (!e.lower().contains(pi(i))) continue;
    (i < star_at ? pre : suf) += 1;
  }
  return ((pre - suf) % 3 + 3) % 3;
}

HypercubeGraph HypercubeGraph::build(int n) {
  if (n < 0 || n > 24)
    throw std::invalid_argument("hypercube graph materialization supports n <= 24");
  HypercubeGraph q;
  q.n = n;
  const VertexMask vcount = VertexMask{1} << n;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) << (n > 0 ? n - 1 : 0));
  q.edge_lookup_.assign(static_cast<std::size_t>(vcount) * std::max(n, 1), -1);
  std::vector<std::string> labels(vcount);
  for (VertexMask m = 0; m < vcount; ++m) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) s[i] = '1';
    labels[m] = s;
    for (int d = 1; d <= n; ++d) {
      if (m >> (d - 1) & 1) continue;
      int id = static_cast<int>(edges.size());
      edges.emplace_back(static_cast<int>(m), static_cast<int>(m | (1u << (d - 1))));
      q.edge_lookup_[m * n + (d - 1)] = id;
    }
  }
  q.graph = Graph(static_cast<int>(vcount), std::move(edges), std::move(labels));
  return q;
}

int HypercubeGraph::edge_id(VertexMask u, VertexMask v) const {
  if (u > v) std::swap(u, v);
  VertexMask diff = u ^ v;
  if (std::popcount(diff) != 1 || (u & diff)) return -1;
  return edge_lookup_[u * n + std::countr_zero(diff)];
}

int HypercubeGraph::direction(int edge_id) const {
  auto [u, v] = graph.edge(edge_id);
  return std::countr_zero(static_cast<VertexMask>(u ^ v)) + 1;
}

VertexMask HypercubeGraph::lower_mask(int edge_id) const {
  return static_cast<VertexMask>(graph.edge(edge_id).first);
}

StarEdge HypercubeGraph::star(int edge_id) const {
  VertexMask lo = lower_mask(edge_id);
  std::vector<int> elems;
  for (int i = 1; i <= n; ++i)
    if (lo >> (i - 1) & 1) elems.push_back(i);
  return StarEdge(HypercubeVertex(n, elems), direction(edge_id));
}

int HypercubeGraph::edge_layer(int edge_id) const {
  return mask_layer(static_cast<VertexMask>(graph.edge(edge_id).second));
}

Graph hypercube_graph(int n) { return HypercubeGraph::build(n).graph; }

EdgeLayerGraph edge_layer_graph(int n, int k) {
  if (n < 0 || n > 24) throw std::invalid_argument("edge_layer_graph: n out of range");
  if (k < 0 || k > n)
    throw std::invalid_argument("edge_layer_graph: k must be in [0, n]");
  EdgeLayerGraph out;
  out.n = n;
  out.k = k;
  const VertexMask vcount = VertexMask{1} << n;
  std::vector<int> id_of(vcount, -1);
  std::vector<std::string> labels;
  for (VertexMask m = 0; m < vcount; ++m) {
    int layer = mask_layer(m);
    if (layer != k && layer != k - 1) continue;
    id_of[m] = static_cast<int>(out.masks.size());
    out.masks.push_back(m);
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) s[i] = '1';
    labels.push_back(s);
  }
  std::vector<std::pair<int, int>> edges;
  for (VertexMask m : out.masks) {
    if (mask_layer(m) != k - 1) continue;
    for (int d = 0; d < n; ++d) {
      if (m >> d & 1) continue;
      VertexMask up = m | (VertexMask{1} << d);
      if (id_of[up] >= 0) edges.emplace_back(id_of[m], id_of[up]);
    }
  }
  out.graph = Graph(static_cast<int>(out.masks.size()), std::move(edges),
                    std::move(labels));
  return out;
}

}  // namespace hcube
