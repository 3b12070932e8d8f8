#include "qstirling/oracle.hpp"

#include <stdexcept>

namespace qstirling::oracle {

namespace {

void enumerate(int pos, int n, int max_used, std::vector<long long>& counts) {
  if (pos == n) {
    ++counts[static_cast<std::size_t>(max_used + 1)];
    return;
  }
  for (int v = 0; v <= max_used + 1; ++v)
    enumerate(pos + 1, n, v > max_used ? v : max_used, counts);
}

}  // namespace

std::vector<long long> partition_counts_by_blocks(int n) {
  if (n < 0) throw std::invalid_argument("negative set size");
  if (n > 13) throw std::domain_error("oracle limit");
  std::vector<long long> counts(static_cast<std::size_t>(n) + 1, 0);
  if (n == 0) {
    counts[0] = 1;  // the empty partition
    return counts;
  }
  enumerate(0, n, -1, counts);
  return counts;
}

long long set_partition_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  return partition_counts_by_blocks(n)[static_cast<std::size_t>(k)];
}

long long bell_number(int n) {
  long long total = 0;
  for (long long c : partition_counts_by_blocks(n)) total += c;
  return total;
}

}  // namespace qstirling::oracle
