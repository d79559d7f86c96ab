#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>

#include "fibercheck/monomial.hpp"

namespace fibercheck {

enum class OrderKind { Lex, GrevLex };

/// Monomial order: plain Lex/GrevLex, or a two-block elimination order that
/// compares the first front_count variables before the rest. Any block split
/// has the elimination property: a monomial touching a front variable beats
/// every monomial supported in the back block alone.
class OrderSpec {
public:
    static OrderSpec lex() { return OrderSpec(Shape::Plain, OrderKind::Lex, OrderKind::Lex, 0); }
    static OrderSpec grevlex() { return OrderSpec(Shape::Plain, OrderKind::GrevLex, OrderKind::GrevLex, 0); }

    static OrderSpec block(std::size_t front_count, OrderKind front = OrderKind::Lex,
                           OrderKind back = OrderKind::GrevLex) {
        if (front_count == 0) throw std::invalid_argument("OrderSpec: empty front block");
        return OrderSpec(Shape::Block, front, back, front_count);
    }

    bool is_block() const { return shape_ == Shape::Block; }
    std::size_t front_count() const { return front_count_; }
    OrderKind front_kind() const { return front_; }
    OrderKind back_kind() const { return back_; }

    /// Compares a and b; greater means a is the larger monomial.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        const auto n = a.nvars();
        if (b.nvars() != n) throw std::invalid_argument("OrderSpec: variable count mismatch");
        if (shape_ == Shape::Plain) return compare_range(front_, a, b, 0, n);
        if (front_count_ >= n) throw std::invalid_argument("OrderSpec: block front covers all variables");
        auto head = compare_range(front_, a, b, 0, front_count_);
        if (head != std::strong_ordering::equal) return head;
        return compare_range(back_, a, b, front_count_, n);
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const OrderSpec& a, const OrderSpec& b) {
        return a.key() == b.key();
    }
    friend bool operator!=(const OrderSpec& a, const OrderSpec& b) { return !(a == b); }
    friend bool operator<(const OrderSpec& a, const OrderSpec& b) { return a.key() < b.key(); }

    std::string str() const {
        if (shape_ == Shape::Plain) return front_ == OrderKind::Lex ? "lex" : "grevlex";
        return "block:" + std::to_string(front_count_);
    }

private:
    enum class Shape { Plain, Block };

    OrderSpec(Shape shape, OrderKind front, OrderKind back, std::size_t front_count)
        : shape_(shape), front_(front), back_(back), front_count_(front_count) {}

    std::tuple<int, int, int, std::size_t> key() const {
        return {static_cast<int>(shape_), static_cast<int>(front_), static_cast<int>(back_), front_count_};
    }

    static std::strong_ordering compare_range(OrderKind kind, const Monomial& a, const Monomial& b,
                                              std::size_t begin, std::size_t end) {
        if (kind == OrderKind::Lex) {
            for (std::size_t i = begin; i < end; ++i) {
                if (a.exponent(i) != b.exponent(i))
                    return a.exponent(i) <=> b.exponent(i);
            }
            return std::strong_ordering::equal;
        }
        // grevlex: higher total degree wins; on ties the monomial with the
        // smaller exponent at the last differing position is larger
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = begin; i < end; ++i) {
            da += a.exponent(i);
            db += b.exponent(i);
        }
        if (da != db) return da <=> db;
        for (std::size_t i = end; i-- > begin;) {
            if (a.exponent(i) != b.exponent(i))
                return b.exponent(i) <=> a.exponent(i);
        }
        return std::strong_ordering::equal;
    }

    Shape shape_;
    OrderKind front_, back_;
    std::size_t front_count_;
};

}  // namespace fibercheck
