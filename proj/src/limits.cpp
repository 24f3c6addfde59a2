#include "asphera/limits.hpp"

#include "asphera/errors.hpp"

#include <cstdlib>
#include <string>

namespace asphera {

static Limits make_limits()
{
    Limits lim;
    if (const char* env = std::getenv("ASPHERA_MAX_RANK")) {
        try {
            long long v = std::stoll(env);
            if (v > 0) {
                lim.max_chain_rank = v;
                lim.max_dense_entries = v * 200;
            }
        } catch (...) {
            // Malformed override is ignored; defaults stay in force.
        }
    }
    return lim;
}

Limits& limits()
{
    static Limits lim = make_limits();
    return lim;
}

void guard_chain_rank(long long rank, const char* where)
{
    if (rank > limits().max_chain_rank)
        throw ScaleExceeded(std::string(where) + ": chain rank " + std::to_string(rank) +
                            " exceeds limit " + std::to_string(limits().max_chain_rank) +
                            " (override with ASPHERA_MAX_RANK)");
}

void guard_dense(long long rows, long long cols, const char* where)
{
    if (rows * cols > limits().max_dense_entries)
        throw ScaleExceeded(std::string(where) + ": dense matrix " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " exceeds the entry limit");
}

} // namespace asphera
