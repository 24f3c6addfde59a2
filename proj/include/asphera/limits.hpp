#pragma once

namespace asphera {

// Resource guards.  The environment variable ASPHERA_MAX_RANK overrides
// max_chain_rank at process start; the dense-entry cap scales with it.
struct Limits {
    long long max_chain_rank = 200000;
    long long max_dense_entries = 40000000;
};

Limits& limits();

void guard_chain_rank(long long rank, const char* where);
void guard_dense(long long rows, long long cols, const char* where);

} // namespace asphera
