#include "ffp/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ffp {

namespace {

void check_cap(int value, int cap, const char* what) {
    if (value > cap)
        throw CapExceeded(std::string(what) + ": size " + std::to_string(value) + " exceeds cap " +
                          std::to_string(cap));
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

// Visits every horizontal strip nu -> next with nu <= next <= outer and
// |next| - |nu| = count.
void for_each_horizontal_strip(const std::vector<int>& nu, const std::vector<int>& outer, int count,
                               const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> next = nu;
    const std::size_t rows = outer.size();
    std::function<void(std::size_t, int)> rec = [&](std::size_t row, int left) {
        if (row == rows) {
            if (left == 0) visit(next);
            return;
        }
        int limit = outer[row];
        if (row > 0) limit = std::min(limit, nu[row - 1]);
        const int room = limit - nu[row];
        for (int add = std::min(room, left); add >= 0; --add) {
            next[row] = nu[row] + add;
            rec(row + 1, left - add);
        }
        next[row] = nu[row];
    };
    rec(0, count);
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::two_column(int k, int p) {
    if (k < 0 || p < 0 || 2 * p > k)
        throw std::invalid_argument("two_column requires 0 <= p <= k/2");
    std::vector<int> parts(static_cast<std::size_t>(k - p), 1);
    std::fill_n(parts.begin(), p, 2);
    return Partition(std::move(parts));
}

Partition Partition::from_unsorted(std::vector<int> entries) {
    for (int e : entries)
        if (e < 0) throw std::invalid_argument("negative entry in composition");
    std::erase(entries, 0);
    std::sort(entries.begin(), entries.end(), std::greater<>());
    return Partition(std::move(entries));
}

Partition Partition::transpose() const {
    std::vector<int> out;
    if (parts_.empty()) return Partition();
    out.reserve(static_cast<std::size_t>(parts_.front()));
    for (int col = 0; col < parts_.front(); ++col) {
        int height = 0;
        while (height < length() && parts_[static_cast<std::size_t>(height)] > col) ++height;
        out.push_back(height);
    }
    return Partition(std::move(out));
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> out(static_cast<std::size_t>(parts_.empty() ? 1 : parts_.front() + 1), 0);
    for (int p : parts_) ++out[static_cast<std::size_t>(p)];
    return out;
}

bool Partition::is_two_column() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p <= 2; });
}

int Partition::two_count() const {
    if (!is_two_column()) throw std::invalid_argument(to_string() + " is not of the form 2_k^p");
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), 2));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition: '" + text + "'");
        }
        if (used != token.size()) throw std::invalid_argument("malformed partition: '" + text + "'");
        parts.push_back(value);
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ') {
            flush();
        } else if (c == '(' || c == ')' || c == '[' || c == ']') {
            continue;
        } else {
            token.push_back(c);
        }
    }
    flush();
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int k, int cap) {
    if (k < 0) throw std::invalid_argument("partitions_of requires k >= 0");
    check_cap(k, cap, "partitions_of");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(k, k, prefix, out);
    return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) throw std::invalid_argument("dominance_leq: partitions of different sizes");
    int mu_sum = 0;
    int lambda_sum = 0;
    const int rows = std::max(mu.length(), lambda.length());
    for (int i = 0; i < rows; ++i) {
        mu_sum += mu.part(i);
        lambda_sum += lambda.part(i);
        if (mu_sum > lambda_sum) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// WeakComposition

WeakComposition::WeakComposition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < 0) throw std::invalid_argument("weak composition entries must be non-negative");
}

int WeakComposition::size() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::vector<WeakComposition> orbit(const WeakComposition& base) {
    std::vector<int> current = base.entries();
    std::sort(current.begin(), current.end());
    std::vector<WeakComposition> out;
    do {
        out.emplace_back(current);
    } while (std::next_permutation(current.begin(), current.end()));
    return out;
}

Integer orbit_size(const WeakComposition& base) {
    std::map<int, int> counts;
    for (int e : base.entries()) ++counts[e];
    Integer out = factorial(base.length());
    for (const auto& [value, count] : counts) out /= factorial(count);
    return out;
}

// ---------------------------------------------------------------------------
// SetPartition

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("set partition blocks must be non-empty");
        std::sort(b.begin(), b.end());
        size_ += static_cast<int>(b.size());
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    labels_.assign(static_cast<std::size_t>(size_), -1);
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        for (int e : blocks_[bi]) {
            if (e < 1 || e > size_ || labels_[static_cast<std::size_t>(e - 1)] != -1)
                throw std::invalid_argument("set partition blocks must be disjoint and cover {1..k}");
            labels_[static_cast<std::size_t>(e - 1)] = static_cast<int>(bi);
        }
    }
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
    std::vector<std::vector<int>> blocks;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto label = static_cast<std::size_t>(labels[i]);
        if (label >= blocks.size()) blocks.resize(label + 1);
        blocks[label].push_back(static_cast<int>(i) + 1);
    }
    return SetPartition(std::move(blocks));
}

Partition SetPartition::type() const {
    std::vector<int> sizes;
    for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
    return Partition::from_unsorted(std::move(sizes));
}

std::string SetPartition::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        os << (bi ? "," : "") << '{';
        for (std::size_t i = 0; i < blocks_[bi].size(); ++i) os << (i ? "," : "") << blocks_[bi][i];
        os << '}';
    }
    os << '}';
    return os.str();
}

std::vector<SetPartition> set_partitions(int k, int cap) {
    if (k < 0) throw std::invalid_argument("set_partitions requires k >= 0");
    check_cap(k, cap, "set_partitions");
    std::vector<SetPartition> out;
    std::vector<int> labels(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == k) {
            out.push_back(SetPartition::from_labels(labels));
            return;
        }
        for (int label = 0; label <= used; ++label) {
            labels[static_cast<std::size_t>(pos)] = label;
            rec(pos + 1, std::max(used, label + 1));
        }
    };
    if (k == 0) return {SetPartition()};
    labels[0] = 0;
    rec(1, 1);
    return out;
}

std::vector<SetPartition> set_partitions_of_type(const Partition& mu, int cap) {
    std::vector<SetPartition> out;
    for (auto& pi : set_partitions(mu.size(), cap))
        if (pi.type() == mu) out.push_back(std::move(pi));
    return out;
}

Integer set_partition_count(const Partition& mu) {
    Integer out = factorial(mu.size());
    for (int part : mu.parts()) out /= factorial(part);
    const auto mult = mu.multiplicities();
    for (std::size_t v = 1; v < mult.size(); ++v) out /= factorial(mult[v]);
    return out;
}

// ---------------------------------------------------------------------------
// Tableaux and Kostka numbers

bool Tableau::is_semistandard() const {
    if (static_cast<int>(rows.size()) != shape.length()) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != shape.part(static_cast<int>(i))) return false;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (rows[i][j] < 1) return false;
            if (j > 0 && rows[i][j] < rows[i][j - 1]) return false;
            if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;
        }
    }
    return true;
}

WeakComposition Tableau::weight(int max_entry) const {
    std::vector<int> w(static_cast<std::size_t>(max_entry), 0);
    for (const auto& row : rows)
        for (int e : row) {
            if (e < 1 || e > max_entry) throw std::invalid_argument("tableau entry outside 1..max_entry");
            ++w[static_cast<std::size_t>(e - 1)];
        }
    return WeakComposition(std::move(w));
}

void for_each_ssyt(const Partition& shape, int max_entry, const WeakComposition& weight,
                   const std::function<void(const Tableau&)>& visit) {
    const bool fixed_weight = weight.length() > 0;
    if (fixed_weight) {
        if (weight.size() != shape.size()) return;
        max_entry = weight.length();
    }
    const auto& outer = shape.parts();
    Tableau tableau{shape, std::vector<std::vector<int>>(outer.size())};
    std::function<void(int, const std::vector<int>&, int)> rec = [&](int letter, const std::vector<int>& nu,
                                                                     int filled) {
        if (filled == shape.size()) {
            visit(tableau);
            return;
        }
        if (letter > max_entry) return;
        auto place = [&](const std::vector<int>& next) {
            for (std::size_t r = 0; r < next.size(); ++r)
                for (int c = nu[r]; c < next[r]; ++c) tableau.rows[r].push_back(letter);
            const int added = std::accumulate(next.begin(), next.end(), 0) - std::accumulate(nu.begin(), nu.end(), 0);
            rec(letter + 1, next, filled + added);
            for (std::size_t r = 0; r < next.size(); ++r) tableau.rows[r].resize(static_cast<std::size_t>(nu[r]));
        };
        if (fixed_weight) {
            for_each_horizontal_strip(nu, outer, weight[letter - 1], place);
        } else {
            for (int count = shape.size() - filled; count >= 0; --count)
                for_each_horizontal_strip(nu, outer, count, place);
        }
    };
    rec(1, std::vector<int>(outer.size(), 0), 0);
}

std::vector<Tableau> semistandard_tableaux(const Partition& shape, const WeakComposition& weight, int cap) {
    check_cap(shape.size(), cap, "semistandard_tableaux");
    if (weight.length() == 0 && shape.size() > 0)
        throw std::invalid_argument("semistandard_tableaux requires a weight");
    std::vector<Tableau> out;
    for_each_ssyt(shape, weight.length(), weight, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

Integer kostka(const Partition& lambda, const Partition& mu, int cap) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("kostka: partitions of different sizes");
    check_cap(lambda.size(), cap, "kostka");
    // Memoized over (letter, current shape); the memo is local to this call.
    std::map<std::pair<int, std::vector<int>>, Integer> memo;
    const auto& outer = lambda.parts();
    std::function<Integer(int, const std::vector<int>&)> count = [&](int letter, const std::vector<int>& nu) {
        if (letter == mu.length()) return Integer(nu == outer ? 1 : 0);
        auto key = std::make_pair(letter, nu);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Integer total = 0;
        for_each_horizontal_strip(nu, outer, mu.part(letter),
                                  [&](const std::vector<int>& next) { total += count(letter + 1, next); });
        memo.emplace(std::move(key), total);
        return total;
    };
    return count(0, std::vector<int>(outer.size(), 0));
}

const std::vector<std::vector<Integer>>& kostka_matrix(int k) {
    static std::mutex mutex;
    static std::map<int, std::vector<std::vector<Integer>>> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
    const auto parts = partitions_of(k);
    std::vector<std::vector<Integer>> m(parts.size(), std::vector<Integer>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) m[i][j] = kostka(parts[i], parts[j]);
    return cache.emplace(k, std::move(m)).first->second;
}

HooksAndContents hooks_and_contents(const Partition& lambda) {
    HooksAndContents out;
    const Partition columns = lambda.transpose();
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) {
            const int arm = lambda.part(i) - j - 1;
            const int leg = columns.part(j) - i - 1;
            out.hooks.push_back(arm + leg + 1);
            out.contents.push_back(j - i);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Split chains

namespace {

void increasing_sequences(int length, int m, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> seq(static_cast<std::size_t>(length));
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == length) {
            visit(seq);
            return;
        }
        for (int v = lo; v <= m - (length - pos - 1); ++v) {
            seq[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);
}

}  // namespace

std::vector<std::vector<int>> split_chains(int k, int l, int m, int cap) {
    if (l < 0 || l > k || k > m) throw std::invalid_argument("split_chains requires 0 <= l <= k <= m");
    check_cap(m, cap, "split_chains");
    std::vector<std::vector<int>> out;
    increasing_sequences(k - l, m, [&](const std::vector<int>& head) {
        increasing_sequences(l, m, [&](const std::vector<int>& tail) {
            std::vector<int> chain = head;
            chain.insert(chain.end(), tail.begin(), tail.end());
            out.push_back(std::move(chain));
        });
    });
    return out;
}

WeakComposition split_chain_weight(const std::vector<int>& chain, int m) {
    std::vector<int> w(static_cast<std::size_t>(m), 0);
    for (int v : chain) ++w[static_cast<std::size_t>(v - 1)];
    return WeakComposition(std::move(w));
}

Integer split_chain_count(int k, int l, int q) {
    if (q < 0 || 2 * q > k) throw std::invalid_argument("split_chain_count requires 0 <= q <= k/2");
    std::vector<int> target;
    target.insert(target.end(), static_cast<std::size_t>(q), 0);
    target.insert(target.end(), static_cast<std::size_t>(k - 2 * q), 1);
    target.insert(target.end(), static_cast<std::size_t>(q), 2);
    Integer count = 0;
    for (const auto& chain : split_chains(k, l, k)) {
        auto w = split_chain_weight(chain, k).entries();
        std::sort(w.begin(), w.end());
        if (w == target) ++count;
    }
    return count;
}

Integer split_chain_count_formula(int k, int l, int q) {
    if (q <= l && l <= k - q) return binomial(k, l) * binomial(k - l, q) * binomial(l, q);
    return 0;
}

}  // namespace ffp
