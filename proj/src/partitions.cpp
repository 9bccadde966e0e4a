#include "partq/partitions.hpp"

namespace partq {

std::vector<Partition> list_partitions(long n, const PartitionConstraint& c) {
    std::vector<Partition> out;
    for_each_partition(n, c, [&](const std::vector<int>& parts) {
        out.emplace_back(parts);
    });
    return out;
}

std::vector<Overpartition> list_overpartitions(long n) {
    std::vector<Overpartition> out;
    for_each_overpartition(n, [&](const std::vector<int>& parts, const std::vector<int>& over) {
        out.push_back(Overpartition{parts, over});
    });
    return out;
}

DurfeeResult durfee(std::span<const int> row_boxes, int offset) {
    int h = 0;
    while (h < static_cast<int>(row_boxes.size()) && row_boxes[h] >= (h + 1) + offset)
        ++h;
    return {h, h + offset, offset};
}

ModularDiagram ModularDiagram::from_partition(const Partition& p, int m, int a) {
    if (m < 1 || a < 1 || a > m)
        throw std::invalid_argument("modular diagram requires 1 <= a <= m");
    ModularDiagram d;
    d.modulus = m;
    d.residue = a;
    d.row_boxes.reserve(p.parts().size());
    for (int part : p.parts()) {
        if (part % m != a % m)
            throw std::invalid_argument("part " + std::to_string(part) +
                                        " is not congruent to " + std::to_string(a) +
                                        " mod " + std::to_string(m));
        d.row_boxes.push_back((part - 1) / m + 1);   // b + 1 boxes for part m*b + a
    }
    return d;
}

Partition ModularDiagram::to_partition() const {
    std::vector<int> parts;
    parts.reserve(row_boxes.size());
    for (int boxes : row_boxes) {
        if (boxes < 1) throw std::invalid_argument("row must hold at least one box");
        parts.push_back(modulus * (boxes - 1) + residue);
    }
    return Partition(std::move(parts));
}

} // namespace partq
