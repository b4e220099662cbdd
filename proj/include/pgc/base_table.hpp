#ifndef PGC_BASE_TABLE_HPP
#define PGC_BASE_TABLE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pgc/bits.hpp"
#include "pgc/pi.hpp"

namespace pgc {

// Exhaustive catalogue of the distinct n-node pi-graphs.  keys holds their
// canonical codes under pi's distinctness relation, strictly increasing;
// reprs holds a plane code for one representative each (equal to the key for
// plane pi).
struct BaseTable {
    PiDescriptor pi;
    int n = 0;
    std::vector<std::string> keys;
    std::vector<std::string> reprs;

    std::uint64_t alpha() const { return keys.size(); }
    int index_width() const;  // exactly ceil(log2(alpha))
};

class TableCache {
  public:
    TableCache() = default;
    explicit TableCache(std::string dir) : dir_(std::move(dir)) {}

    // Builds, loads from disk, or returns the memoized table.  Throws
    // CapExceeded beyond the enumeration cap.
    const BaseTable& get(const PiDescriptor& pi, int n);

    static constexpr int kMaxEnumerationNodes = 8;
    static constexpr std::size_t kMaxStates = 2'000'000;

  private:
    std::string dir_;
    std::map<std::string, BaseTable> mem_;
};

std::uint64_t count_distinct(TableCache& cache, const PiDescriptor& pi, int n);

// Fixed-width table index of g (throws NotInTable when g is not a pi-graph
// of the right size).
BitString index_bits(const PlaneGraph& g, const PiDescriptor& pi, const BaseTable& table);
std::uint64_t index_value(const PlaneGraph& g, const PiDescriptor& pi, const BaseTable& table);
PlaneGraph unindex(std::uint64_t index, const BaseTable& table);

// Independent generators used to cross-check the enumeration.
// All distinct n-node pi-graphs found by brute force over edge subsets and
// rotation systems; simple pi and n <= 4 only.
std::set<std::string> enumerate_by_rotation_brute(const PiDescriptor& pi, int n);
// All distinct simple plane triangulations on n nodes via degree-3 vertex
// insertion, diagonal flips, and re-rooting.
std::set<std::string> enumerate_triangulations_by_insertion_flip(int n);

}  // namespace pgc

#endif  // PGC_BASE_TABLE_HPP
