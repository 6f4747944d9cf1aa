#include "mdim/labels.hpp"

#include <charconv>
#include <stdexcept>

namespace mdim {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_number(std::string_view digits, std::string_view whole) {
  int value = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size()) {
    throw std::invalid_argument("malformed vertex label '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

LabelContext label_context(const LabeledGraph& g) {
  if (const auto* prism = std::get_if<PrismFamily>(&g.family())) {
    return {prism->n * prism->k, prism->m};
  }
  return {g.vertex_count(), 1};
}

std::string format_label(VertexId v, const LabelContext& context) {
  if (v.value() < 1 || v.value() > context.vertex_count()) {
    throw std::out_of_range("vertex x" + std::to_string(v.value()) + " outside the graph");
  }
  if (context.copies == 1) return "x" + std::to_string(v.value());
  const int t = (v.value() - 1) % context.copy_size + 1;
  const int copy = (v.value() - 1) / context.copy_size + 1;
  return "x" + std::to_string(t) + "^(" + std::to_string(copy) + ")";
}

std::string format_set(const VertexSet& q, const LabelContext& context) {
  std::string out = "{";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_label(q[i], context);
  }
  return out + "}";
}

VertexId parse_label(std::string_view text, const LabelContext& context) {
  const std::string_view whole = trim(text);
  std::string_view rest = whole;
  if (rest.empty() || rest.front() != 'x') {
    throw std::invalid_argument("vertex label must start with 'x': '" + std::string(whole) + "'");
  }
  rest.remove_prefix(1);
  if (!rest.empty() && rest.front() == '_') rest.remove_prefix(1);

  const auto caret = rest.find('^');
  const int t = parse_number(rest.substr(0, caret), whole);
  int copy = 1;
  if (caret != std::string_view::npos) {
    std::string_view suffix = rest.substr(caret + 1);
    if (!suffix.empty() && suffix.front() == '(') {
      if (suffix.back() != ')') throw std::invalid_argument("unbalanced parenthesis in '" + std::string(whole) + "'");
      suffix = suffix.substr(1, suffix.size() - 2);
    }
    copy = parse_number(suffix, whole);
    if (context.copies == 1) {
      throw std::invalid_argument("copy suffix given for a single-copy graph: '" + std::string(whole) + "'");
    }
  } else if (context.copies > 1) {
    throw std::invalid_argument("prism vertex needs a copy suffix: '" + std::string(whole) + "'");
  }

  if (t < 1 || t > context.copy_size || copy < 1 || copy > context.copies) {
    throw std::out_of_range("vertex label '" + std::string(whole) + "' outside the graph");
  }
  return VertexId((copy - 1) * context.copy_size + t);
}

VertexSet parse_label_list(std::string_view text, const LabelContext& context) {
  std::vector<VertexId> members;
  while (true) {
    const auto comma = text.find(',');
    members.push_back(parse_label(text.substr(0, comma), context));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return VertexSet(std::move(members));
}

}  // namespace mdim
