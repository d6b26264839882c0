#pragma once

// Ulam-Harris-Neveu labels and populations of labelled particles.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "bdc/model.hpp"

namespace bdc {

class Label {
public:
    Label() = default;  // the root
    explicit Label(std::vector<std::uint32_t> seq) : seq_(std::move(seq)) {}
    Label(std::initializer_list<std::uint32_t> seq) : seq_(seq) {}

    static Label root() { return {}; }
    /// Parses the dot-joined form; the empty string is the root.
    static Label parse(const std::string& text);

    bool is_root() const noexcept { return seq_.empty(); }
    std::size_t depth() const noexcept { return seq_.size(); }
    const std::vector<std::uint32_t>& sequence() const noexcept { return seq_; }

    /// Label of the k-th child (0-based): this followed by k.
    Label child(std::uint32_t k) const;

    /// "1.2.0"; the root renders as "".
    std::string to_string() const;

    /// Self-delimiting byte string: u32 length then u32 entries, little endian.
    std::string encode() const;

    friend bool operator==(const Label&, const Label&) = default;
    /// Lexicographic order; an ancestor sorts before its descendants.
    friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
        return a.seq_ <=> b.seq_;
    }

private:
    std::vector<std::uint32_t> seq_;
};

Label concat(const Label& i, const Label& j);

/// True iff j is a proper prefix of i.
bool is_strict_ancestor(const Label& j, const Label& i);

std::vector<Label> children(const Label& i, std::size_t k);

struct Member {
    Label label;
    Point position;
    bool operator==(const Member&) const = default;
};

/// Finite set of labelled positions. Members are kept sorted by label.
class Population {
public:
    Population() = default;
    /// Throws ConfigError if labels repeat or violate the antichain condition.
    explicit Population(std::vector<Member> members);

    /// One particle: the root at x.
    static Population single(Point x);
    /// Particles labelled 0, 1, ..., n-1 (the root alone when n == 1).
    static Population from_positions(const std::vector<Point>& positions);

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const std::vector<Member>& members() const noexcept { return members_; }
    bool contains(const Label& i) const;

    bool operator==(const Population&) const = default;

private:
    friend Population replace_by_children(const Population&, const Label&, std::size_t,
                                          const Point&);
    std::vector<Member> members_;
};

/// No member label is a strict prefix of another. With sorted labels it is
/// enough to compare neighbours.
bool is_antichain(const std::vector<Member>& sorted_members);

/// Removes i and inserts its k children at x. Throws std::logic_error if i is absent.
Population replace_by_children(const Population& pop, const Label& i, std::size_t k,
                               const Point& x);

}  // namespace bdc
