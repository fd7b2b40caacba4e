#ifndef ONEREL_MAP_TEXT_HPP
#define ONEREL_MAP_TEXT_HPP

#include <string>
#include <string_view>

#include "onerel/genmap.hpp"
#include "onerel/text.hpp"

namespace onerel {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace detail

// Accepts the shorthands alpha(k), beta(k), zeta(k), delta(k), psi(k) and
// the explicit form `a -> <word>; b -> <word>`.
inline GenMap parse_genmap(std::string_view text) {
  const std::string_view t = detail::trim(text);

  const auto try_shorthand = [&](std::string_view name,
                                 Family fam) -> std::optional<GenMap> {
    if (t.size() < name.size() + 3 || t.substr(0, name.size()) != name)
      return std::nullopt;
    std::string_view rest = detail::trim(t.substr(name.size()));
    if (rest.empty() || rest.front() != '(' || rest.back() != ')')
      return std::nullopt;
    rest = detail::trim(rest.substr(1, rest.size() - 2));
    std::size_t used = 0;
    long long k = 0;
    try {
      k = std::stoll(std::string(rest), &used);
    } catch (const std::exception&) {
      throw parse_error("map syntax error: bad family parameter", 0);
    }
    if (used != rest.size())
      throw parse_error("map syntax error: bad family parameter", 0);
    return family(fam, k);
  };

  for (const auto& [name, fam] :
       {std::pair<std::string_view, Family>{"alpha", Family::Alpha},
        {"beta", Family::Beta},
        {"zeta", Family::Zeta},
        {"delta", Family::Delta},
        {"psi", Family::Psi}})
    if (auto m = try_shorthand(name, fam)) return *m;

  const std::size_t semi = t.find(';');
  if (semi == std::string_view::npos)
    throw parse_error(
        "map syntax error: expected `a -> <word>; b -> <word>` or a family "
        "shorthand",
        0);
  auto parse_side = [](std::string_view side, char gen) -> Word {
    side = detail::trim(side);
    if (side.size() < 4 || side[0] != gen ||
        detail::trim(side.substr(1, side.find("->") - 1)) != "" ||
        side.find("->") == std::string_view::npos)
      throw parse_error(std::string("map syntax error: expected `") + gen +
                            " -> <word>`",
                        0);
    return parse_word(side.substr(side.find("->") + 2));
  };
  GenMap m{parse_side(t.substr(0, semi), 'a'),
           parse_side(t.substr(semi + 1), 'b'), std::monostate{}};
  if (auto tag = detail::match_family(m.image_a, m.image_b)) m.tag = *tag;
  return m;
}

inline std::string format_genmap(const GenMap& m) {
  return "a -> " + format_word(m.image_a) + "; b -> " +
         format_word(m.image_b);
}

}  // namespace onerel

#endif  // ONEREL_MAP_TEXT_HPP
