#include "chardeg/spec_parser.hpp"

#include <cctype>
#include <limits>

#include "chardeg/errors.hpp"

namespace chardeg {

ParseError::ParseError(std::size_t position, std::string expected, std::string const &text)
  : SpecError("parse error at position " + std::to_string(position) + ": expected " + expected +
              " in \"" + text + "\""),
    position_(position), expected_(std::move(expected))
{
}

namespace {

struct FamilyName {
  char const *name;
  Family family;
};

constexpr FamilyName kFamilies[] = {
  {"cyclic", Family::cyclic},   {"dihedral", Family::dihedral}, {"quaternion", Family::quaternion},
  {"sym", Family::symmetric},   {"alt", Family::alternating},   {"sl2", Family::sl2},
  {"psl2", Family::psl2},
};

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse()
  {
    skip_space();
    GroupSpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size())
      fail("end of input");
    return spec;
  }

private:
  [[noreturn]] void fail(std::string expected) const
  {
    throw ParseError(pos_, std::move(expected), std::string(text_));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space()
  {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }

  void expect(char c, char const *what)
  {
    if (peek() != c)
      fail(what);
    ++pos_;
  }

  std::string identifier()
  {
    std::size_t start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek())))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer()
  {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("integer");
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > std::numeric_limits<int>::max())
        fail("integer that fits in 32 bits");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  GroupSpec parse_spec()
  {
    std::size_t const start = pos_;
    std::string const name = identifier();
    if (name.empty())
      fail("family name, \"perm\" or \"product\"");
    expect(':', "':'");

    if (name == "product") {
      skip_space();
      GroupSpec left = parse_spec();
      skip_space();
      expect(',', "',' between product factors");
      skip_space();
      GroupSpec right = parse_spec();
      return GroupSpec::product(std::move(left), std::move(right));
    }
    if (name == "perm")
      return parse_cycles();

    for (auto const &f : kFamilies)
      if (name == f.name)
        return GroupSpec::named(f.family, integer());

    pos_ = start;
    fail("one of alt, sym, cyclic, dihedral, quaternion, sl2, psl2, perm, product");
  }

  GroupSpec parse_cycles()
  {
    GroupSpec::Explicit spec;
    skip_space();
    if (peek() != '(')
      fail("'(' starting a cycle");
    while (peek() == '(') {
      std::vector<std::vector<int>> generator;
      while (peek() == '(') {
        ++pos_;
        std::vector<int> cycle;
        for (;;) {
          while (peek() == ' ' || peek() == '\t' || peek() == ',')
            ++pos_;
          if (peek() == ')')
            break;
          int const point = integer();
          if (point < 1)
            fail("1-based point");
          cycle.push_back(point);
        }
        expect(')', "')'");
        generator.push_back(std::move(cycle));
      }
      spec.generators.push_back(std::move(generator));
      std::size_t const before = pos_;
      skip_space();
      if (peek() != '(') {
        pos_ = before;
        break;
      }
    }
    return {std::move(spec)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

char const *family_name(Family family)
{
  for (auto const &f : kFamilies)
    if (f.family == family)
      return f.name;
  return "?";
}

GroupSpec parse_group_spec(std::string_view text)
{
  return Parser(text).parse();
}

std::string render_group_spec(GroupSpec const &spec)
{
  if (auto const *named = std::get_if<GroupSpec::Named>(&spec.node))
    return std::string(family_name(named->family)) + ":" + std::to_string(named->parameter);

  if (auto const *expl = std::get_if<GroupSpec::Explicit>(&spec.node)) {
    std::string out = "perm:";
    for (std::size_t g = 0; g < expl->generators.size(); ++g) {
      if (g > 0)
        out += ' ';
      for (auto const &cycle : expl->generators[g]) {
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          if (i > 0)
            out += ' ';
          out += std::to_string(cycle[i]);
        }
        out += ')';
      }
    }
    return out;
  }

  auto const &prod = std::get<GroupSpec::Product>(spec.node);
  return "product:" + render_group_spec(*prod.left) + "," + render_group_spec(*prod.right);
}

} // namespace chardeg
