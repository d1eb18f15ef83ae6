#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcdcat/errors.hpp"

namespace bcdcat {

/// A Young diagram given by its weakly decreasing row lengths.  Cells are
/// indexed (i, j) from 1 in (row, column) order to match the usual diagram
/// statistics conventions.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition row(int m);
    static Partition column(int m);
    /// Parses "2,1" or "[2,1]" or "" (empty diagram).
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    /// Number of cells |lambda|.
    int size() const;
    /// Number of nonzero rows (= first column length).
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// lambda_i for 1-based i; zero beyond the last row.
    int part(int i) const;
    /// Column length lambda^v_j for 1-based j.
    int col(int j) const;

    Partition transposed() const;
    bool contains(int i, int j) const;

    /// hl(i,j) = lambda_i + lambda^v_j - i - j + 1; throws DomainError for a
    /// cell outside the diagram.
    int hook_length(int i, int j) const;
    int d_stat(int i, int j) const;
    int d_prime_stat(int i, int j) const;

    /// Sum of cell contents j - i over the diagram.
    long content_sum() const;
    std::vector<std::pair<int, int>> cells() const;

    /// All diagrams obtained by adding / removing one cell.
    std::vector<Partition> with_cell_added() const;
    std::vector<Partition> with_cell_removed() const;

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    std::vector<int> parts_;
};

inline int cell_content(int i, int j) { return j - i; }

/// Canonical label order: by cell count, then by row vector with the
/// lexicographically larger one first, so (2) precedes (1,1).
bool canonical_less(const Partition& a, const Partition& b);

struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

/// Upper bounds defining the label alcoves.  Any combination may be active;
/// enumeration requires at least one row-type and one column-type cap so the
/// result is finite.
struct DiagramConstraints {
    std::optional<int> row1;     // lambda_1 <= v
    std::optional<int> row2;     // lambda_2 <= v
    std::optional<int> row12;    // lambda_1 + lambda_2 <= v
    std::optional<int> col1;     // lambda^v_1 <= v
    std::optional<int> col2;     // lambda^v_2 <= v
    std::optional<int> col12;    // lambda^v_1 + lambda^v_2 <= v
    std::optional<int> rowcol;   // lambda_1 + lambda^v_1 <= v

    bool admits(const Partition& p) const;
};

/// All partitions satisfying the constraints, in canonical order.
std::vector<Partition> enumerate_diagrams(const DiagramConstraints& c);

}  // namespace bcdcat
