#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace anatomy {

struct BFileEntry {
    int64_t index;
    int64_t value;
};

/// OEIS b-file: "index value" per line, '#' comment lines ignored.
std::vector<BFileEntry> parse_bfile(std::istream& in);
std::vector<BFileEntry> parse_bfile_path(const std::string& path);

void write_bfile(std::ostream& out, const std::vector<uint64_t>& seq,
                 int64_t first_index = 1);

struct BFileCheck {
    bool ok;
    size_t compared;      // entries compared
    size_t mismatch_pos;  // 0-based position of first mismatch (if !ok)
    int64_t expected;
    int64_t actual;
};

/// Compares a computed sequence against b-file entries (up to the shorter
/// of the two).
BFileCheck check_against_bfile(const std::vector<uint64_t>& seq,
                               const std::vector<BFileEntry>& entries);

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);

}  // namespace anatomy
