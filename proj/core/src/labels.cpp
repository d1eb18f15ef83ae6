#include "bcdcat/labels.hpp"

namespace bcdcat {

Label Label::plain(Partition p) {
    Label l;
    l.kind = LabelKind::Plain;
    l.partition = std::move(p);
    return l;
}

Label Label::split(Partition p, bool plus) {
    Label l;
    l.kind = plus ? LabelKind::SplitPlus : LabelKind::SplitMinus;
    l.partition = std::move(p);
    return l;
}

Label Label::quad(Partition p, bool first_plus, bool second_plus) {
    Label l;
    l.kind = first_plus ? (second_plus ? LabelKind::QuadPP : LabelKind::QuadPM)
                        : (second_plus ? LabelKind::QuadMP : LabelKind::QuadMM);
    l.partition = std::move(p);
    return l;
}

Label Label::hat(Partition p) {
    Label l;
    l.kind = LabelKind::Hat;
    l.partition = std::move(p);
    return l;
}

Label Label::tensor(Partition column_gen, Partition row_gen) {
    Label l;
    l.kind = LabelKind::Tensor;
    l.tensor_column = std::move(column_gen);
    l.tensor_row = std::move(row_gen);
    return l;
}

Label Label::undetermined(Partition p) {
    Label l;
    l.kind = LabelKind::Undetermined;
    l.partition = std::move(p);
    return l;
}

const char* label_kind_name(LabelKind k) {
    switch (k) {
        case LabelKind::Plain: return "plain";
        case LabelKind::SplitPlus: return "split+";
        case LabelKind::SplitMinus: return "split-";
        case LabelKind::QuadPP: return "quad++";
        case LabelKind::QuadPM: return "quad+-";
        case LabelKind::QuadMP: return "quad-+";
        case LabelKind::QuadMM: return "quad--";
        case LabelKind::Hat: return "hat";
        case LabelKind::Tensor: return "tensor";
        case LabelKind::Undetermined: return "undetermined";
    }
    return "?";
}

std::string Label::str() const {
    if (kind == LabelKind::Tensor)
        return tensor_column.str() + "(x)" + tensor_row.str();
    std::string base = partition.str();
    switch (kind) {
        case LabelKind::Plain: return base;
        case LabelKind::SplitPlus: return base + "+";
        case LabelKind::SplitMinus: return base + "-";
        case LabelKind::QuadPP: return "+" + base + "+";
        case LabelKind::QuadPM: return "+" + base + "-";
        case LabelKind::QuadMP: return "-" + base + "+";
        case LabelKind::QuadMM: return "-" + base + "-";
        case LabelKind::Hat: return base + "^";
        case LabelKind::Undetermined: return base + "?";
        case LabelKind::Tensor: break;
    }
    return base;
}

bool operator==(const Label& a, const Label& b) {
    return a.kind == b.kind && a.partition == b.partition &&
           a.tensor_column == b.tensor_column && a.tensor_row == b.tensor_row;
}

bool label_less(const Label& a, const Label& b) {
    const bool at = a.is_tensor(), bt = b.is_tensor();
    if (at != bt) return bt;  // tensors last
    if (at && bt) {
        if (a.tensor_column != b.tensor_column) return canonical_less(a.tensor_column, b.tensor_column);
        return canonical_less(a.tensor_row, b.tensor_row);
    }
    if (a.partition != b.partition) return canonical_less(a.partition, b.partition);
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
}

}  // namespace bcdcat
