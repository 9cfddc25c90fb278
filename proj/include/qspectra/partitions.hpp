#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qspectra {

class combinatorics_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<long> parts;

    Partition() = default;
    explicit Partition(std::vector<long> p) : parts(std::move(p)) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
                throw combinatorics_error("invalid partition");
        }
    }

    long weight() const {
        long w = 0;
        for (long p : parts) w += p;
        return w;
    }
    int height() const { return static_cast<int>(parts.size()); }
    long part(int row) const {  // 1-based, zero beyond the height
        return (row >= 1 && row <= height()) ? parts[row - 1] : 0;
    }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }

    /// Rows (1-based) where a box can be added, with the content of that box.
    std::vector<std::pair<int, long>> addable() const {
        std::vector<std::pair<int, long>> out;
        for (int r = 1; r <= height(); ++r)
            if (r == 1 || part(r) < part(r - 1)) out.push_back({r, part(r) + 1 - r});
        out.push_back({height() + 1, -height()});
        return out;
    }
    /// Rows (1-based) whose last box can be removed.
    std::vector<int> removable() const {
        std::vector<int> out;
        for (int r = 1; r <= height(); ++r)
            if (r == height() || part(r) > part(r + 1)) out.push_back(r);
        return out;
    }

    Partition with_box(int row) const {
        std::vector<long> p = parts;
        if (row == height() + 1)
            p.push_back(1);
        else
            p[row - 1] += 1;
        return Partition(std::move(p));
    }
    Partition without_box(int row) const {
        std::vector<long> p = parts;
        p[row - 1] -= 1;
        return Partition(std::move(p));
    }
};

/**
 * Standard Young tableau of a given shape: entries 1..k increase along rows
 * and columns. box_row[t-1] / contents[t-1] give the row and content
 * (column - row) of the box holding t.
 */
struct StandardTableau {
    Partition shape;
    std::vector<int> box_row;     // 1-based row per entry
    std::vector<long> contents;   // content per entry

    long weight() const { return static_cast<long>(contents.size()); }

    /// Content of the box holding entry t (1-based).
    long content(int t) const { return contents.at(static_cast<std::size_t>(t) - 1); }

    std::string str() const {
        std::string s = shape.str() + "[";
        for (std::size_t i = 0; i < contents.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(contents[i]);
        }
        return s + "]";
    }
};

/// All partitions of k (optionally capped height), in descending
/// lexicographic order: (k), (k-1,1), ..., (1^k).
inline std::vector<Partition> partitions(long k, std::optional<int> max_height = std::nullopt) {
    if (k < 0) throw combinatorics_error("negative partition weight");
    std::vector<Partition> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rest, long cap) -> void {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        if (max_height && static_cast<int>(cur.size()) >= *max_height) return;
        for (long p = std::min(cap, rest); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, k, k == 0 ? 1 : k);
    return out;
}

/// All standard tableaux of the given shape, ordered by descending
/// lexicographic content sequence. The count is d_lambda.
inline std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    std::vector<StandardTableau> out;
    StandardTableau cur;
    const long k = shape.weight();
    cur.box_row.resize(static_cast<std::size_t>(k));
    cur.contents.resize(static_cast<std::size_t>(k));
    Partition grown;
    auto rec = [&](auto&& self, int t) -> void {
        if (t > k) {
            cur.shape = shape;
            out.push_back(cur);
            return;
        }
        auto boxes = grown.addable();
        // descending content keeps the emitted order lexicographically descending
        std::sort(boxes.begin(), boxes.end(),
                  [](const auto& a, const auto& b) { return a.second > b.second; });
        for (const auto& [row, c] : boxes) {
            if (grown.part(row) + 1 > shape.part(row)) continue;
            cur.box_row[static_cast<std::size_t>(t) - 1] = row;
            cur.contents[static_cast<std::size_t>(t) - 1] = c;
            Partition saved = grown;
            grown = grown.with_box(row);
            self(self, t + 1);
            grown = saved;
        }
    };
    rec(rec, 1);
    return out;
}

/// All standard tableaux of weight k across all shapes, descending
/// content-lexicographic order (which groups shapes in partition order).
inline std::vector<StandardTableau> standard_tableaux_of_weight(long k) {
    std::vector<StandardTableau> all;
    for (const Partition& lam : partitions(k)) {
        auto ts = standard_tableaux(lam);
        all.insert(all.end(), ts.begin(), ts.end());
    }
    std::sort(all.begin(), all.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.contents > b.contents;
    });
    return all;
}

}  // namespace qspectra
