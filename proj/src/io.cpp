#include "anatomy/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace anatomy {

std::vector<BFileEntry> parse_bfile(std::istream& in) {
    std::vector<BFileEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        BFileEntry e;
        if (!(ls >> e.index >> e.value))
            throw std::runtime_error("parse_bfile: malformed line: " + line);
        out.push_back(e);
    }
    return out;
}

std::vector<BFileEntry> parse_bfile_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("parse_bfile: cannot open " + path);
    return parse_bfile(in);
}

void write_bfile(std::ostream& out, const std::vector<uint64_t>& seq,
                 int64_t first_index) {
    for (size_t i = 0; i < seq.size(); ++i)
        out << (first_index + static_cast<int64_t>(i)) << ' ' << seq[i] << '\n';
}

BFileCheck check_against_bfile(const std::vector<uint64_t>& seq,
                               const std::vector<BFileEntry>& entries) {
    size_t n = std::min(seq.size(), entries.size());
    for (size_t i = 0; i < n; ++i) {
        if (static_cast<int64_t>(seq[i]) != entries[i].value)
            return {false, n, i, entries[i].value,
                    static_cast<int64_t>(seq[i])};
    }
    return {true, n, 0, 0, 0};
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << cells[i];
    }
    out << '\n';
}

}  // namespace anatomy
