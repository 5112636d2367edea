#include "ph/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ph {

namespace {

struct Candidate {
  std::vector<Index> vertices;
  double diam;
};

}  // namespace

Filtration build_vietoris_rips(const PointCloud& cloud, double r_max,
                               int divisions, int max_dim) {
  if (cloud.points.empty()) throw std::invalid_argument("empty point cloud");
  if (r_max <= 0.0) throw std::invalid_argument("r_max must be positive");
  if (divisions < 1) throw std::invalid_argument("divisions must be >= 1");
  if (max_dim < 1) throw std::invalid_argument("max_dim must be >= 1");

  const Index n = static_cast<Index>(cloud.size());
  const double step = r_max / divisions;
  const double threshold = 2.0 * r_max * (1.0 + 1e-12);

  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b)
      dist[a][b] = dist[b][a] = distance(cloud, a, b);

  // Incremental coface expansion over the neighbourhood graph at r_T:
  // extend each d-simplex by a vertex above its maximum that is adjacent
  // to all of its vertices.
  std::vector<Candidate> current;
  std::vector<Candidate> all;
  for (Index v = 1; v <= n; ++v) current.push_back({{v}, 0.0});
  all = current;
  for (int d = 1; d <= max_dim; ++d) {
    std::vector<Candidate> next;
    for (const auto& simplex : current) {
      for (Index u = simplex.vertices.back() + 1; u <= n; ++u) {
        double diam = simplex.diam;
        bool ok = true;
        for (Index w : simplex.vertices) {
          const double duw = dist[u - 1][w - 1];
          if (duw > threshold) {
            ok = false;
            break;
          }
          diam = std::max(diam, duw);
        }
        if (!ok) continue;
        Candidate c;
        c.vertices = simplex.vertices;
        c.vertices.push_back(u);
        c.diam = diam;
        next.push_back(std::move(c));
      }
    }
    for (const auto& c : next) all.push_back(c);
    current = std::move(next);
  }

  Filtration filtration;
  for (int i = 1; i <= divisions; ++i) filtration.scale_grid.push_back(i * step);
  for (auto& c : all) {
    double scale = 0.0;
    if (c.diam > 0.0) {
      int i = static_cast<int>(std::ceil(c.diam / (2.0 * step) - 1e-9));
      if (i < 1) i = 1;
      if (i > divisions) continue;  // enters only beyond r_T
      scale = i * step;
    }
    Simplex s;
    s.dim = static_cast<int>(c.vertices.size()) - 1;
    s.vertices = std::move(c.vertices);
    s.scale = scale;
    filtration.simplices.push_back(std::move(s));
  }

  std::sort(filtration.simplices.begin(), filtration.simplices.end(),
            [](const Simplex& a, const Simplex& b) {
              if (a.scale != b.scale) return a.scale < b.scale;
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.vertices < b.vertices;
            });
  return filtration;
}

BoundaryMatrix boundary_matrix(const Filtration& filtration) {
  const Index m = filtration.size();
  BoundaryMatrix matrix(m);
  std::map<std::vector<Index>, Index> index_of;
  for (Index j = 1; j <= m; ++j)
    index_of[filtration.simplices[j - 1].vertices] = j;

  for (Index j = 1; j <= m; ++j) {
    const Simplex& s = filtration.simplices[j - 1];
    matrix.set_dim(j, s.dim);
    if (s.dim == 0) continue;
    std::vector<Index> rows;
    std::vector<Index> face(s.vertices.size() - 1);
    for (size_t drop = 0; drop < s.vertices.size(); ++drop) {
      size_t t = 0;
      for (size_t k = 0; k < s.vertices.size(); ++k)
        if (k != drop) face[t++] = s.vertices[k];
      auto it = index_of.find(face);
      if (it == index_of.end())
        throw std::logic_error("filtration is missing a face");
      rows.push_back(it->second);
    }
    std::sort(rows.begin(), rows.end());
    matrix.set_column(j, std::move(rows));
  }
  return matrix;
}

void write_filtration(std::ostream& out, const Filtration& filtration) {
  char buf[64];
  for (Index j = 1; j <= filtration.size(); ++j) {
    const Simplex& s = filtration.simplices[j - 1];
    std::snprintf(buf, sizeof(buf), "%.17g", s.scale);
    out << j << " " << s.dim << " " << buf;
    for (Index v : s.vertices) out << " " << v;
    out << "\n";
  }
}

Filtration read_filtration(std::istream& in) {
  Filtration filtration;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Index index;
    Simplex s;
    if (!(ls >> index >> s.dim >> s.scale))
      throw std::runtime_error("filtration file: bad line");
    Index v;
    while (ls >> v) s.vertices.push_back(v);
    if (static_cast<int>(s.vertices.size()) != s.dim + 1)
      throw std::runtime_error("filtration file: dim/vertex mismatch");
    if (index != static_cast<Index>(filtration.simplices.size()) + 1)
      throw std::runtime_error("filtration file: indices not consecutive");
    filtration.simplices.push_back(std::move(s));
  }
  return filtration;
}

}  // namespace ph
