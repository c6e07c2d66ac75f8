#include "hcube/subdivision.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hcube {

Graph complete_graph(int t) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) edges.emplace_back(i, j);
  return Graph(t, std::move(edges));
}

Graph complete_bipartite_graph(int s, int t) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < t; ++j) edges.emplace_back(i, s + j);
  return Graph(s + t, std::move(edges));
}

SubdividedGraph subdivide(const Graph& base, int k) {
  if (k < 0) throw std::invalid_argument("subdivide: k must be >= 0");
  SubdividedGraph out;
  out.base = base;
  out.insertions = k;
  std::vector<std::pair<int, int>> edges;
  int next = base.vertex_count();
  for (int e = 0; e < base.edge_count(); ++e) {
    auto [x, y] = base.edge(e);
    std::vector<int> path{x};
    for (int j = 0; j < k; ++j) path.push_back(next++);
    path.push_back(y);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      edges.emplace_back(path[i], path[i + 1]);
    out.paths.push_back(std::move(path));
  }
  out.graph = Graph(next, std::move(edges));
  return out;
}

namespace {

BitVec with_coord(BitVec b, int coord) {
  b.set(coord);
  return b;
}
BitVec without_coord(BitVec b, int coord) {
  b.reset(coord);
  return b;
}

}  // namespace

SubdivisionEmbedding embed_odd_subdivision_complete(int t, int k) {
  if (t < 1 || k < 0)
    throw std::invalid_argument("embed_odd_subdivision_complete: need t >= 1, k >= 0");
  SubdivisionEmbedding out;
  out.subdivision = subdivide(complete_graph(t), 2 * k + 1);
  const Graph& base = out.subdivision.base;
  const int m = base.edge_count();
  const int n = (k >= 1) ? t * k + m : t;

  // Coordinates: A_x = {x*k+1 .. x*k+k} per branch vertex (k >= 1, else {x+1}),
  // then b_e = t*k + e + 1 per base edge.
  auto a_coord = [&](int x, int i) { return (k >= 1) ? x * k + i : x + 1; };
  auto b_coord = [&](int e) { return t * k + e + 1; };

  std::vector<BitVec> img(out.subdivision.graph.vertex_count());
  for (int x = 0; x < t; ++x) {
    BitVec b;
    if (k >= 1)
      for (int i = 1; i <= k; ++i) b.set(a_coord(x, i));
    else
      b.set(a_coord(x, 1));
    img[x] = b;
  }
  for (int e = 0; e < m; ++e) {
    auto [x, y] = base.edge(e);
    const auto& path = out.subdivision.paths[e];
    if (k == 0) {
      img[path[1]] = with_coord(img[x], a_coord(y, 1));
      continue;
    }
    std::vector<BitVec> z(2 * k + 2);  // z[1..2k+1]
    z[1] = with_coord(img[x], b_coord(e));
    for (int i = 1; i <= k; ++i) {
      z[2 * i] = without_coord(z[2 * i - 1], a_coord(x, i));
      if (i < k) z[2 * i + 1] = with_coord(z[2 * i], a_coord(y, i));
    }
    z[2 * k + 1] = with_coord(img[y], b_coord(e));
    for (int j = 1; j <= 2 * k + 1; ++j) img[path[j]] = z[j];
  }

  out.embedding.ambient_dimension = n;
  out.embedding.layer = k + 1;
  out.embedding.image.reserve(img.size());
  for (const auto& b : img) out.embedding.image.emplace_back(n, b);

  if (k >= 1) {
    for (int i = 1; i <= k; ++i) {
      std::vector<int> part;
      for (int x = 0; x < t; ++x) part.push_back(a_coord(x, i));
      out.partite_parts.push_back(std::move(part));
    }
    std::vector<int> bpart;
    for (int e = 0; e < m; ++e) bpart.push_back(b_coord(e));
    out.partite_parts.push_back(std::move(bpart));
  }
  return out;
}

SubdivisionEmbedding embed_even_subdivision_bipartite(int t, int k) {
  if (t < 1 || k < 1)
    throw std::invalid_argument("embed_even_subdivision_bipartite: need t >= 1, k >= 1");
  SubdivisionEmbedding out;
  out.subdivision = subdivide(complete_bipartite_graph(t, t), 2 * k);
  const Graph& base = out.subdivision.base;
  const int m = base.edge_count();  // t^2
  std::vector<BitVec> img(out.subdivision.graph.vertex_count());
  int n = 0;

  if (k == 1) {
    // [n] = X u Y u {q}
    n = 2 * t + 1;
    auto x_coord = [&](int i) { return i + 1; };
    auto y_coord = [&](int j) { return t + j + 1; };
    const int q = 2 * t + 1;
    for (int i = 0; i < t; ++i) {
      BitVec b;
      b.set(x_coord(i));
      for (int j = 0; j < t; ++j) b.set(y_coord(j));
      img[i] = b;
    }
    for (int j = 0; j < t; ++j) {
      BitVec b;
      for (int jj = 0; jj < t; ++jj)
        if (jj != j) b.set(y_coord(jj));
      b.set(q);
      img[t + j] = b;
    }
    for (int e = 0; e < m; ++e) {
      auto [a, bb] = base.edge(e);
      int j = bb - t;
      const auto& path = out.subdivision.paths[e];
      BitVec z1 = without_coord(img[a], y_coord(j));
      img[path[1]] = z1;
      img[path[2]] = with_coord(z1, q);
    }
    out.embedding.layer = t + 1;
  } else if (k == 2) {
    // [n] = X u Y u {q1,q2,q3}
    n = 2 * t + 3;
    auto x_coord = [&](int i) { return i + 1; };
    auto y_coord = [&](int j) { return t + j + 1; };
    const int q1 = 2 * t + 1, q2 = 2 * t + 2, q3 = 2 * t + 3;
    for (int i = 0; i < t; ++i) {
      BitVec b;
      b.set(x_coord(i));
      for (int j = 0; j < t; ++j) b.set(y_coord(j));
      b.set(q3);
      img[i] = b;
    }
    for (int j = 0; j < t; ++j) {
      BitVec b;
      for (int jj = 0; jj < t; ++jj)
        if (jj != j) b.set(y_coord(jj));
      b.set(q1);
      b.set(q2);
      img[t + j] = b;
    }
    for (int e = 0; e < m; ++e) {
      auto [a, bb] = base.edge(e);
      int j = bb - t;
      const auto& path = out.subdivision.paths[e];
      BitVec z1 = without_coord(img[a], y_coord(j));
      BitVec z2 = with_coord(z1, q1);
      BitVec z3 = without_coord(z2, q3);
      BitVec z4 = with_coord(z3, q2);
      img[path[1]] = z1;
      img[path[2]] = z2;
      img[path[3]] = z3;
      img[path[4]] = z4;
    }
    out.embedding.layer = t + 2;
  } else {
    // [n] = A u B u {c} u S_e per edge, S_e = {s_e^1 .. s_e^{k-1}}
    n = 2 * t + 1 + m * (k - 1);
    auto a_coord = [&](int i) { return i + 1; };
    auto b_coordinate = [&](int j) { return t + j + 1; };
    const int c = 2 * t + 1;
    auto s_coord = [&](int e, int mi) { return 2 * t + 1 + e * (k - 1) + mi; };

    BitVec s_all;  // S = every s_e^1
    for (int e = 0; e < m; ++e) s_all.set(s_coord(e, 1));
    for (int i = 0; i < t; ++i) {
      BitVec b = s_all;
      b.set(a_coord(i));
      b.set(c);
      img[i] = b;
    }
    for (int j = 0; j < t; ++j) {
      BitVec b = s_all;
      b.set(b_coordinate(j));
      img[t + j] = b;
    }
    for (int e = 0; e < m; ++e) {
      auto [av, bv] = base.edge(e);
      int i = av, j = bv - t;
      const auto& path = out.subdivision.paths[e];
      std::vector<BitVec> z(2 * k + 1);  // z[1..2k]
      z[1] = without_coord(img[av], s_coord(e, 1));  // {a,c} u S'_e
      z[2] = with_coord(z[1], s_coord(e, 2));
      z[3] = without_coord(z[2], a_coord(i));
      z[4] = with_coord(z[3], b_coordinate(j));
      z[5] = without_coord(z[4], c);
      for (int i2 = 1; i2 <= k - 3; ++i2) {
        z[6 + 2 * i2 - 2] = with_coord(z[6 + 2 * i2 - 3], s_coord(e, 2 + i2));
        z[6 + 2 * i2 - 1] = without_coord(z[6 + 2 * i2 - 2], s_coord(e, 1 + i2));
      }
      z[2 * k] = with_coord(z[2 * k - 1], s_coord(e, 1));
      for (int p = 1; p <= 2 * k; ++p) img[path[p]] = z[p];
    }
    out.embedding.layer = t * t + 2;

    if (k >= 4 && k % 2 == 0) {
      std::vector<int> ab;
      for (int i = 0; i < t; ++i) ab.push_back(a_coord(i));
      for (int j = 0; j < t; ++j) ab.push_back(b_coordinate(j));
      out.partite_parts.push_back(std::move(ab));
      for (int e = 0; e < m; ++e) {
        std::vector<int> part{s_coord(e, 1)};
        for (int mi = 2; mi <= k - 1; mi += 2) part.push_back(s_coord(e, mi));
        out.partite_parts.push_back(std::move(part));
      }
      std::vector<int> last{c};
      for (int e = 0; e < m; ++e)
        for (int mi = 3; mi <= k - 1; mi += 2) last.push_back(s_coord(e, mi));
      out.partite_parts.push_back(std::move(last));
    }
  }

  out.embedding.ambient_dimension = n;
  out.embedding.image.reserve(img.size());
  for (const auto& b : img) out.embedding.image.emplace_back(n, b);
  return out;
}

// --- indicator-vector tables -------------------------------------------------

namespace {

std::vector<TableColumn> make_table1() {
  return {
      {1,
       {{"f(x)", "010"},
        {"f(z1)", "110"},
        {"f(z2)", "100"},
        {"f(z3)", "101"},
        {"f(y)", "001"}}},
      {2,
       {{"f(x)", "01100"},
        {"f(z1)", "11100"},
        {"f(z2)", "10100"},
        {"f(z3)", "10110"},
        {"f(z4)", "10010"},
        {"f(z5)", "10011"},
        {"f(y)", "00011"}}},
      {3,
       {{"f(x)", "0111000"},
        {"f(z1)", "1111000"},
        {"f(z2)", "1011000"},
        {"f(z3)", "1011100"},
        {"f(z4)", "1001100"},
        {"f(z5)", "1001110"},
        {"f(z6)", "1000110"},
        {"f(z7)", "1000111"},
        {"f(y)", "0000111"}}},
  };
}

std::vector<TableColumn> make_table2() {
  return {
      {3,
       {{"f(a)", "10110"},
        {"f(z1)", "10100"},
        {"f(z2)", "10101"},
        {"f(z3)", "00101"},
        {"f(z4)", "01101"},
        {"f(z5)", "01001"},
        {"f(z6)", "01011"},
        {"f(b)", "01010"}}},
      {4,
       {{"f(a)", "101100"},
        {"f(z1)", "101000"},
        {"f(z2)", "101010"},
        {"f(z3)", "001010"},
        {"f(z4)", "011010"},
        {"f(z5)", "010010"},
        {"f(z6)", "010011"},
        {"f(z7)", "010001"},
        {"f(z8)", "010101"},
        {"f(b)", "010100"}}},
      {5,
       {{"f(a)", "1011000"},
        {"f(z1)", "1010000"},
        {"f(z2)", "1010100"},
        {"f(z3)", "0010100"},
        {"f(z4)", "0110100"},
        {"f(z5)", "0100100"},
        {"f(z6)", "0100110"},
        {"f(z7)", "0100010"},
        {"f(z8)", "0100011"},
        {"f(z9)", "0100001"},
        {"f(z10)", "0101001"},
        {"f(b)", "0101000"}}},
  };
}

}  // namespace

const std::vector<TableColumn>& table_columns(int table) {
  static const std::vector<TableColumn> t1 = make_table1();
  static const std::vector<TableColumn> t2 = make_table2();
  if (table == 1) return t1;
  if (table == 2) return t2;
  throw std::invalid_argument("table_columns: tables 1 and 2 only");
}

std::string render_indicator_table(int table) {
  const auto& cols = table_columns(table);
  std::ostringstream out;
  if (table == 1)
    out << "Indicator vectors restricted to (b_e, x_1..x_k, y_1..y_k)\n";
  else
    out << "Indicator vectors restricted to (a, b, c, s_e^1..s_e^{k-1})\n";
  // union of row labels, in column order of the widest column
  const TableColumn& widest = cols.back();
  out << "        ";
  for (const auto& col : cols) {
    std::string head = "k=" + std::to_string(col.k);
    head.resize(std::max(col.rows[0].second.size() + 2, head.size()), ' ');
    out << head;
  }
  out << "\n";
  for (const auto& [label, unused] : widest.rows) {
    std::string line = label;
    line.resize(8, ' ');
    for (const auto& col : cols) {
      std::string cell;
      for (const auto& [l2, bits] : col.rows)
        if (l2 == label) cell = bits;
      cell.resize(col.rows[0].second.size() + 2, ' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

TableCheckResult table_fidelity_check(int table, int k) {
  const auto& cols = table_columns(table);
  const TableColumn* col = nullptr;
  for (const auto& cc : cols)
    if (cc.k == k) col = &cc;
  if (!col)
    throw std::invalid_argument("table " + std::to_string(table) +
                                " does not tabulate k=" + std::to_string(k));

  SubdivisionEmbedding se;
  std::vector<int> coords;   // tabulated coordinates, in table order
  std::vector<int> row_ids;  // graph vertex per table row
  if (table == 1) {
    se = embed_odd_subdivision_complete(2, k);
    coords.push_back(2 * k + 1);  // b_e
    for (int i = 1; i <= k; ++i) coords.push_back(i);
    for (int i = 1; i <= k; ++i) coords.push_back(k + i);
    row_ids.push_back(0);
    for (int j = 1; j <= 2 * k + 1; ++j) row_ids.push_back(1 + j);
    row_ids.push_back(1);
  } else {
    se = embed_even_subdivision_bipartite(1, k);
    coords = {1, 2, 3};
    for (int mi = 1; mi <= k - 1; ++mi) coords.push_back(3 + mi);
    row_ids.push_back(0);
    for (int j = 1; j <= 2 * k; ++j) row_ids.push_back(1 + j);
    row_ids.push_back(1);
  }

  TableCheckResult res;
  for (std::size_t r = 0; r < col->rows.size(); ++r) {
    const auto& [label, expected] = col->rows[r];
    std::string got;
    for (int coord : coords)
      got += se.embedding.image[row_ids[r]].contains(coord) ? '1' : '0';
    if (got != expected) {
      res.ok = false;
      res.mismatches.push_back(label + ": table " + expected + " vs construction " + got);
    }
  }
  return res;
}

}  // namespace hcube
