#include "ph/barcode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace ph {

bool Interval::essential() const { return std::isinf(death); }

Barcode extract_pairs(const Filtration& filtration, const LowVector& lowstar) {
  std::vector<double> scales(filtration.size() + 1, 0.0);
  std::vector<int> dims(filtration.size() + 1, 0);
  for (Index j = 1; j <= filtration.size(); ++j) {
    scales[j] = filtration.simplices[j - 1].scale;
    dims[j] = filtration.simplices[j - 1].dim;
  }
  return extract_pairs(scales, dims, lowstar);
}

Barcode extract_pairs(const std::vector<double>& scales,
                      const std::vector<int>& dims, const LowVector& lowstar) {
  const size_t m = lowstar.size() - 1;
  if (!is_reduced(lowstar))
    throw std::invalid_argument("extract_pairs: low vector not injective on support");

  std::vector<char> destroyed(m + 1, 0);
  Barcode barcode;
  for (size_t j = 1; j <= m; ++j) {
    const Index i = lowstar[j];
    if (i == 0) continue;
    destroyed[i] = 1;
    barcode.push_back({scales[i], scales[j], dims[i]});
  }
  for (size_t e = 1; e <= m; ++e)
    if (lowstar[e] == 0 && !destroyed[e])
      barcode.push_back(
          {scales[e], std::numeric_limits<double>::infinity(), dims[e]});

  std::sort(barcode.begin(), barcode.end(), [](const Interval& a, const Interval& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death < b.death;
  });
  return barcode;
}

void write_barcode(std::ostream& out, const Barcode& barcode) {
  char buf[64];
  for (const Interval& iv : barcode) {
    std::snprintf(buf, sizeof(buf), "%.12g", iv.birth);
    out << buf << " ";
    if (iv.essential()) {
      out << "inf";
    } else {
      std::snprintf(buf, sizeof(buf), "%.12g", iv.death);
      out << buf;
    }
    out << " " << iv.dim << "\n";
  }
}

}  // namespace ph
