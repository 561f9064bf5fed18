#include "lawvere/sexpr.hpp"

#include "lawvere/errors.hpp"

#include <cctype>

namespace lawvere::sexpr {

namespace {

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    Node read_top()
    {
        skip_space();
        Node node = read();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return node;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError(what + " at offset " + std::to_string(pos_));
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    static bool is_delimiter(char c)
    {
        return c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c));
    }

    Node read()
    {
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        Node node;
        node.offset = pos_;
        if (text_[pos_] == ')') {
            fail("unexpected ')'");
        }
        if (text_[pos_] == '(') {
            node.kind = Node::Kind::List;
            ++pos_;
            for (;;) {
                skip_space();
                if (pos_ >= text_.size()) {
                    fail("unterminated list");
                }
                if (text_[pos_] == ')') {
                    ++pos_;
                    return node;
                }
                node.items.push_back(read());
            }
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && !is_delimiter(text_[pos_])) {
            ++pos_;
        }
        node.atom = std::string(text_.substr(start, pos_ - start));
        return node;
    }
};

} // namespace

Node parse(std::string_view text)
{
    return Reader(text).read_top();
}

std::string where(const Node& node)
{
    return "at offset " + std::to_string(node.offset);
}

} // namespace lawvere::sexpr
