#pragma once

#include <string>

#include "bcdcat/partition.hpp"

namespace bcdcat {

/// Simple-object labels.  Plain partitions label the pre-modular categories;
/// the remaining variants appear after modularization (Split on order-2
/// fixed points, Quad / Hat on order-4 fixed points of the even orthogonal
/// series) or as composite transparent objects extending a dominating set
/// (Tensor).  Undetermined marks an order-4 fixed point whose splitting
/// pattern was not supplied.
enum class LabelKind {
    Plain,
    SplitPlus,
    SplitMinus,
    QuadPP,
    QuadPM,
    QuadMP,
    QuadMM,
    Hat,
    Tensor,
    Undetermined,
};

struct Label {
    LabelKind kind = LabelKind::Plain;
    Partition partition;       // underlying diagram (unused for Tensor)
    Partition tensor_column;   // Tensor only: the column generator
    Partition tensor_row;      // Tensor only: the row generator

    static Label plain(Partition p);
    static Label split(Partition p, bool plus);
    static Label quad(Partition p, bool first_plus, bool second_plus);
    static Label hat(Partition p);
    static Label tensor(Partition column_gen, Partition row_gen);
    static Label undetermined(Partition p);

    bool is_tensor() const { return kind == LabelKind::Tensor; }
    std::string str() const;

    friend bool operator==(const Label& a, const Label& b);
    friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }
};

const char* label_kind_name(LabelKind k);

/// Canonical order for tables: underlying partition first, then variant,
/// tensor composites last.
bool label_less(const Label& a, const Label& b);

}  // namespace bcdcat
