#include "ellislab/partial_bijection.hpp"

namespace ellislab {

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(pick.size()) == k) {
      out.push_back(pick);
      return;
    }
    if (next > n) return;
    pick.push_back(next);
    self(self, next + 1);
    pick.pop_back();
    if (n - next >= k - static_cast<int>(pick.size())) self(self, next + 1);
  };
  rec(rec, 1);
  return out;
}

}  // namespace

std::vector<PartialBijection<int>> enumerate_monoid(int n, MonoidMode mode, int cap) {
  if (n < 1) fail(ErrorKind::IllegalPoint, "carrier size must be positive");
  if (n > cap)
    fail(ErrorKind::CapExceeded,
         "enumeration cap " + std::to_string(cap) + " exceeded by n=" + std::to_string(n));
  auto carrier = integer_carrier(n);
  std::vector<PartialBijection<int>> out;
  for (int k = 0; k <= n; ++k) {
    auto domains = subsets_of_size(n, k);
    auto ranges = domains;
    for (const auto& dom : domains) {
      for (const auto& ran : ranges) {
        if (mode == MonoidMode::J) {
          // exactly one order-preserving bijection between two k-subsets
          std::vector<std::pair<int, int>> pairs;
          for (int i = 0; i < k; ++i) pairs.emplace_back(dom[i], ran[i]);
          out.emplace_back(carrier, std::move(pairs));
        } else {
          std::vector<int> image = ran;
          do {
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < k; ++i) pairs.emplace_back(dom[i], image[i]);
            out.emplace_back(carrier, std::move(pairs));
          } while (std::next_permutation(image.begin(), image.end()));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ellislab
