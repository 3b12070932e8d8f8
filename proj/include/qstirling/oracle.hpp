#pragma once

#include <vector>

#include "qstirling/rational.hpp"

namespace qstirling::oracle {

// Brute-force set-partition counts by enumerating restricted growth strings;
// deliberately independent of every triangle recurrence in this library.
// Cost is one recursion leaf per partition, so n is capped at 13
// (throws std::domain_error("oracle limit") beyond that).

// counts[k] = number of partitions of an n-set into exactly k nonempty blocks.
std::vector<long long> partition_counts_by_blocks(int n);

long long set_partition_count(int n, int k);

long long bell_number(int n);

}  // namespace qstirling::oracle
