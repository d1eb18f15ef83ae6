#include "bcdcat/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bcdcat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvalidParameterError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidParameterError("partition parts must be weakly decreasing");
    }
}

Partition Partition::row(int m) {
    if (m == 0) return Partition();
    return Partition(std::vector<int>{m});
}

Partition Partition::column(int m) {
    return Partition(std::vector<int>(static_cast<std::size_t>(m), 1));
}

Partition Partition::parse(const std::string& text) {
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(),
                           [](char c) { return c == '[' || c == ']' || c == '(' || c == ')' || c == ' '; }),
            t.end());
    if (t.empty()) return Partition();
    std::vector<int> parts;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            parts.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InvalidParameterError("cannot parse partition: '" + text + "'");
        }
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1) throw DomainError("row index must be >= 1");
    return i <= rows() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::col(int j) const {
    if (j < 1) throw DomainError("column index must be >= 1");
    int count = 0;
    for (int p : parts_) {
        if (p >= j) ++count;
    }
    return count;
}

Partition Partition::transposed() const {
    if (parts_.empty()) return Partition();
    std::vector<int> t(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
    return Partition(std::move(t));
}

bool Partition::contains(int i, int j) const {
    return i >= 1 && j >= 1 && i <= rows() && j <= part(i);
}

int Partition::hook_length(int i, int j) const {
    if (!contains(i, j)) throw DomainError("cell (" + std::to_string(i) + "," + std::to_string(j) + ") outside " + str());
    return part(i) + col(j) - i - j + 1;
}

int Partition::d_stat(int i, int j) const {
    if (!contains(i, j)) throw DomainError("cell outside diagram in d_stat");
    if (i <= j) return part(i) + part(j) - i - j + 1;
    return -col(i) - col(j) + i + j - 1;
}

int Partition::d_prime_stat(int i, int j) const {
    if (!contains(i, j)) throw DomainError("cell outside diagram in d_prime_stat");
    if (i < j) return part(i) + part(j) - i - j + 1;
    return -col(i) - col(j) + i + j - 1;
}

long Partition::content_sum() const {
    long acc = 0;
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= part(i); ++j) acc += cell_content(i, j);
    return acc;
}

std::vector<std::pair<int, int>> Partition::cells() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= part(i); ++j) out.emplace_back(i, j);
    return out;
}

std::vector<Partition> Partition::with_cell_added() const {
    std::vector<Partition> out;
    for (int i = 1; i <= rows() + 1; ++i) {
        if (i > 1 && part(i) >= part(i - 1)) continue;  // would break monotonicity
        std::vector<int> p = parts_;
        if (i <= rows()) {
            p[static_cast<std::size_t>(i - 1)] += 1;
        } else {
            p.push_back(1);
        }
        out.emplace_back(std::move(p));
    }
    return out;
}

std::vector<Partition> Partition::with_cell_removed() const {
    std::vector<Partition> out;
    for (int i = 1; i <= rows(); ++i) {
        if (i < rows() && part(i) == part(i + 1)) continue;
        std::vector<int> p = parts_;
        p[static_cast<std::size_t>(i - 1)] -= 1;
        if (p[static_cast<std::size_t>(i - 1)] == 0) p.pop_back();
        out.emplace_back(std::move(p));
    }
    return out;
}

std::string Partition::str() const {
    if (parts_.empty()) return "[]";
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

bool canonical_less(const Partition& a, const Partition& b) {
    const int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

bool DiagramConstraints::admits(const Partition& p) const {
    if (row1 && p.part(1) > *row1) return false;
    if (row2 && p.part(2) > *row2) return false;
    if (row12 && p.part(1) + p.part(2) > *row12) return false;
    if (col1 && p.col(1) > *col1) return false;
    if (col2 && p.col(2) > *col2) return false;
    if (col12 && p.col(1) + p.col(2) > *col12) return false;
    if (rowcol && !p.empty() && p.part(1) + p.col(1) > *rowcol) return false;
    return true;
}

namespace {

void enumerate_rec(const DiagramConstraints& c, std::vector<int>& stack, int max_next,
                   int max_rows, std::vector<Partition>& out) {
    Partition current(stack);  // stack is always a valid partition prefix
    if (c.admits(current)) {
        out.push_back(current);
    } else {
        // every constraint is monotone under adding rows or cells, so an
        // inadmissible prefix cannot recover
        return;
    }
    if (static_cast<int>(stack.size()) >= max_rows) return;
    for (int next = 1; next <= max_next; ++next) {
        stack.push_back(next);
        enumerate_rec(c, stack, next, max_rows, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_diagrams(const DiagramConstraints& c) {
    int max_first = -1;
    if (c.row1) max_first = *c.row1;
    if (c.row12) max_first = max_first < 0 ? *c.row12 : std::min(max_first, *c.row12);
    if (c.rowcol) {
        int v = *c.rowcol - 1;
        max_first = max_first < 0 ? v : std::min(max_first, v);
    }
    int max_rows = -1;
    if (c.col1) max_rows = *c.col1;
    if (c.col12) max_rows = max_rows < 0 ? *c.col12 : std::min(max_rows, *c.col12);
    if (c.rowcol) {
        int v = *c.rowcol - 1;
        max_rows = max_rows < 0 ? v : std::min(max_rows, v);
    }
    if (max_first < 0 || max_rows < 0)
        throw InvalidParameterError("diagram enumeration needs a row bound and a column bound");

    std::vector<Partition> out;
    std::vector<int> stack;
    enumerate_rec(c, stack, max_first, max_rows, out);
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

}  // namespace bcdcat
