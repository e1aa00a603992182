#include "sg/expr.hpp"

#include <cctype>
#include <utility>

namespace sg {

namespace {

GraphExpr leaf(GraphExpr::Kind k, std::vector<int> params) {
    GraphExpr e;
    e.kind = k;
    e.params = std::move(params);
    return e;
}

void check_size(int n, const char* what) {
    if (n < 1)
        throw precondition_error(std::string(what) + " must be >= 1");
}

} // namespace

GraphExpr GraphExpr::complete(int n) {
    check_size(n, "size parameter");
    return leaf(Kind::Complete, {n});
}
GraphExpr GraphExpr::cycle(int n) {
    if (n < 3) throw precondition_error("cycle needs >= 3 vertices");
    return leaf(Kind::Cycle, {n});
}
GraphExpr GraphExpr::path(int n) {
    check_size(n, "size parameter");
    return leaf(Kind::Path, {n});
}
GraphExpr GraphExpr::empty(int n) {
    check_size(n, "size parameter");
    return leaf(Kind::Empty, {n});
}
GraphExpr GraphExpr::complete_multipartite(std::vector<int> parts) {
    if (parts.empty()) throw precondition_error("multipartite needs at least one part");
    for (int p : parts) check_size(p, "part size");
    return leaf(Kind::CompleteMultipartite, std::move(parts));
}
GraphExpr GraphExpr::multicone(int r, int s, int t) {
    check_size(r, "multicone r");
    check_size(s, "multicone s");
    check_size(t, "multicone t");
    return leaf(Kind::Multicone, {r, s, t});
}
GraphExpr GraphExpr::friendship(int s) {
    check_size(s, "friendship count");
    return leaf(Kind::Friendship, {s});
}
GraphExpr GraphExpr::disjoint_union(std::vector<GraphExpr> parts) {
    if (parts.empty()) throw precondition_error("union of nothing");
    GraphExpr e;
    e.kind = Kind::Union;
    for (auto& p : parts)
        e.children.push_back(std::make_shared<const GraphExpr>(std::move(p)));
    return e;
}
GraphExpr GraphExpr::join(GraphExpr lhs, GraphExpr rhs) {
    GraphExpr e;
    e.kind = Kind::Join;
    e.children.push_back(std::make_shared<const GraphExpr>(std::move(lhs)));
    e.children.push_back(std::make_shared<const GraphExpr>(std::move(rhs)));
    return e;
}
GraphExpr GraphExpr::complement(GraphExpr inner) {
    GraphExpr e;
    e.kind = Kind::Complement;
    e.children.push_back(std::make_shared<const GraphExpr>(std::move(inner)));
    return e;
}
GraphExpr GraphExpr::copies(int k, GraphExpr inner) {
    check_size(k, "copy count");
    GraphExpr e;
    e.kind = Kind::Copies;
    e.params = {k};
    e.children.push_back(std::make_shared<const GraphExpr>(std::move(inner)));
    return e;
}

long long GraphExpr::order() const {
    switch (kind) {
        case Kind::Complete:
        case Kind::Cycle:
        case Kind::Path:
        case Kind::Empty:
            return params[0];
        case Kind::CompleteMultipartite: {
            long long total = 0;
            for (int p : params) total += p;
            return total;
        }
        case Kind::Multicone:
            return params[0] + static_cast<long long>(params[1]) * params[2];
        case Kind::Friendship:
            return 1 + 2LL * params[0];
        case Kind::Union: {
            long long total = 0;
            for (const auto& c : children) total += c->order();
            return total;
        }
        case Kind::Join:
            return children[0]->order() + children[1]->order();
        case Kind::Complement:
            return children[0]->order();
        case Kind::Copies:
            return params[0] * children[0]->order();
    }
    return 0;
}

std::string GraphExpr::to_string() const {
    switch (kind) {
        case Kind::Complete: return "K" + std::to_string(params[0]);
        case Kind::Cycle: return "C" + std::to_string(params[0]);
        case Kind::Path: return "P" + std::to_string(params[0]);
        case Kind::Empty: return "E" + std::to_string(params[0]);
        case Kind::CompleteMultipartite: {
            std::string s = "K{";
            for (std::size_t i = 0; i < params.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(params[i]);
            }
            return s + "}";
        }
        case Kind::Multicone:
            return "M(" + std::to_string(params[0]) + "," + std::to_string(params[1]) +
                   "," + std::to_string(params[2]) + ")";
        case Kind::Friendship: return "F" + std::to_string(params[0]);
        case Kind::Union: {
            std::string s;
            for (std::size_t i = 0; i < children.size(); ++i) {
                if (i) s += " + ";
                s += children[i]->to_string();
            }
            return s;
        }
        case Kind::Join: {
            auto wrap = [](const GraphExpr& e) {
                std::string s = e.to_string();
                if (e.kind == Kind::Union) return "(" + s + ")";
                return s;
            };
            return wrap(*children[0]) + " v " + wrap(*children[1]);
        }
        case Kind::Complement: {
            std::string s = children[0]->to_string();
            if (children[0]->children.empty()) return "~" + s;
            return "~(" + s + ")";
        }
        case Kind::Copies: {
            std::string s = children[0]->to_string();
            if (!children[0]->children.empty()) s = "(" + s + ")";
            return std::to_string(params[0]) + "*" + s;
        }
    }
    return "";
}

namespace {

// Recursive-descent parser.  '+' (union) binds loosest, join next, then
// the prefix forms k* and ~.
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GraphExpr parse() {
        GraphExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // join operator: 'v' or UTF-8 nabla (0xE2 0x88 0x87)
    bool eat_join() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == 'v') {
            ++pos_;
            return true;
        }
        if (pos_ + 3 <= text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xE2 &&
            static_cast<unsigned char>(text_[pos_ + 1]) == 0x88 &&
            static_cast<unsigned char>(text_[pos_ + 2]) == 0x87) {
            pos_ += 3;
            return true;
        }
        return false;
    }

    int parse_int(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > Graph::kMaxOrder * 100L)
                throw parse_error("integer too large", start);
            ++pos_;
        }
        if (pos_ == start)
            throw parse_error(std::string("expected ") + what, pos_);
        if (value < 1)
            throw parse_error(std::string(what) + " must be >= 1", start);
        return static_cast<int>(value);
    }

    GraphExpr parse_expr() {
        std::vector<GraphExpr> parts;
        parts.push_back(parse_join_seq());
        while (eat('+'))
            parts.push_back(parse_join_seq());
        if (parts.size() == 1) return std::move(parts[0]);
        return GraphExpr::disjoint_union(std::move(parts));
    }

    GraphExpr parse_join_seq() {
        GraphExpr e = parse_term();
        while (eat_join())
            e = GraphExpr::join(std::move(e), parse_term());
        return e;
    }

    GraphExpr parse_term() {
        skip_ws();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            int k = parse_int("copy count");
            skip_ws();
            if (!eat('*'))
                throw parse_error("expected '*' after copy count", pos_);
            return GraphExpr::copies(k, parse_atom());
        }
        return parse_atom();
    }

    GraphExpr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size())
            throw parse_error("expected graph atom", pos_);
        std::size_t start = pos_;
        char c = text_[pos_];
        switch (c) {
            case '~':
                ++pos_;
                return GraphExpr::complement(parse_atom());
            case '(': {
                ++pos_;
                GraphExpr e = parse_expr();
                if (!eat(')'))
                    throw parse_error("expected ')'", pos_);
                return e;
            }
            case 'K': {
                ++pos_;
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == '{') {
                    ++pos_;
                    std::vector<int> parts;
                    parts.push_back(parse_int("part size"));
                    while (eat(','))
                        parts.push_back(parse_int("part size"));
                    if (!eat('}'))
                        throw parse_error("expected '}'", pos_);
                    return GraphExpr::complete_multipartite(std::move(parts));
                }
                return GraphExpr::complete(parse_int("size parameter"));
            }
            case 'C': {
                ++pos_;
                int n = parse_int("size parameter");
                if (n < 3)
                    throw parse_error("cycle needs >= 3 vertices", start);
                return GraphExpr::cycle(n);
            }
            case 'P':
                ++pos_;
                return GraphExpr::path(parse_int("size parameter"));
            case 'E':
                ++pos_;
                return GraphExpr::empty(parse_int("size parameter"));
            case 'F':
                ++pos_;
                return GraphExpr::friendship(parse_int("size parameter"));
            case 'M': {
                ++pos_;
                if (!eat('('))
                    throw parse_error("expected '(' after M", pos_);
                int r = parse_int("multicone r");
                if (!eat(','))
                    throw parse_error("expected ','", pos_);
                int s = parse_int("multicone s");
                if (!eat(','))
                    throw parse_error("expected ','", pos_);
                int t = parse_int("multicone t");
                if (!eat(')'))
                    throw parse_error("expected ')'", pos_);
                return GraphExpr::multicone(r, s, t);
            }
            default:
                throw parse_error("unexpected character in expression", pos_);
        }
    }
};

} // namespace

GraphExpr parse_graph_expression(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size())
        throw parse_error("empty expression", 0);
    try {
        return Parser(text).parse();
    } catch (const precondition_error& e) {
        // size constraints surfaced by node constructors during parsing
        throw parse_error(e.what(), 0);
    }
}

Graph make_complete(int n) {
    Graph g(n);
    return g.complement();
}

Graph make_empty(int n) { return Graph(n); }

Graph make_cycle(int n) {
    if (n < 3) throw precondition_error("cycle needs >= 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph make_complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) {
        check_size(p, "part size");
        n += p;
    }
    Graph g = make_complete(n);
    int offset = 0;
    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);
    for (int p : parts) {
        for (int i = offset; i < offset + p; ++i)
            for (int j = offset; j < offset + p; ++j)
                rows[i] &= ~(std::uint64_t{1} << j);
        offset += p;
    }
    return Graph::from_rows(n, rows);
}

Graph make_friendship(int s) {
    return build_multicone({1, s, 2});
}

Graph evaluate_expression(const GraphExpr& e, int max_order) {
    long long n = e.order();
    if (n > max_order)
        throw capacity_error("expression order " + std::to_string(n) +
                             " exceeds maximum " + std::to_string(max_order));
    switch (e.kind) {
        case GraphExpr::Kind::Complete: return make_complete(e.params[0]);
        case GraphExpr::Kind::Cycle: return make_cycle(e.params[0]);
        case GraphExpr::Kind::Path: return make_path(e.params[0]);
        case GraphExpr::Kind::Empty: return make_empty(e.params[0]);
        case GraphExpr::Kind::CompleteMultipartite:
            return make_complete_multipartite(e.params);
        case GraphExpr::Kind::Multicone:
            return build_multicone({e.params[0], e.params[1], e.params[2]}, max_order);
        case GraphExpr::Kind::Friendship:
            return build_multicone({1, e.params[0], 2}, max_order);
        case GraphExpr::Kind::Union: {
            Graph g = evaluate_expression(*e.children[0], max_order);
            for (std::size_t i = 1; i < e.children.size(); ++i)
                g = g.disjoint_union(evaluate_expression(*e.children[i], max_order));
            return g;
        }
        case GraphExpr::Kind::Join:
            return evaluate_expression(*e.children[0], max_order)
                .join(evaluate_expression(*e.children[1], max_order));
        case GraphExpr::Kind::Complement:
            return evaluate_expression(*e.children[0], max_order).complement();
        case GraphExpr::Kind::Copies: {
            Graph unit = evaluate_expression(*e.children[0], max_order);
            Graph g = unit;
            for (int i = 1; i < e.params[0]; ++i) g = g.disjoint_union(unit);
            return g;
        }
    }
    throw precondition_error("unknown expression node");
}

Graph build_multicone(const MulticoneParams& p, int max_order) {
    check_size(p.r, "multicone r");
    check_size(p.s, "multicone s");
    check_size(p.t, "multicone t");
    if (p.order() > max_order)
        throw capacity_error("multicone order " + std::to_string(p.order()) +
                             " exceeds maximum " + std::to_string(max_order));
    Graph sails = make_complete(p.t);
    for (int i = 1; i < p.s; ++i) sails = sails.disjoint_union(make_complete(p.t));
    return make_complete(p.r).join(sails);
}

} // namespace sg
