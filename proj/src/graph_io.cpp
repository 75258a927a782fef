#include <charconv>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "sparsead/graph.hpp"

namespace sparsead {

namespace {

void append_double(std::string& out, double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, res.ptr);
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw std::runtime_error("deserialize: line " + std::to_string(line_no) +
                           ": " + what);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    std::size_t next = line.find(' ', pos);
    if (next == std::string_view::npos) next = line.size();
    if (next > pos) out.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

long parse_int(std::string_view field, int line_no) {
  long value = 0;
  auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size())
    parse_fail(line_no, "malformed integer '" + std::string(field) + "'");
  return value;
}

double parse_double(std::string_view field, int line_no) {
  double value = 0.0;
  auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size())
    parse_fail(line_no, "malformed number '" + std::string(field) + "'");
  return value;
}

}  // namespace

std::string serialize(const Graph& g) {
  int n = g.num_independent();
  int ell = g.num_nodes();
  std::string out = "graph " + std::to_string(n) + " " +
                    std::to_string(g.num_dependent()) + " " +
                    std::to_string(ell) + "\n";
  for (int k = n; k < ell; ++k) {
    const Graph::Node& nd = g.node(k);
    out += "node " + std::to_string(k + 1) + " ";
    out += op_name(nd.tag);
    out += " " + std::to_string(nd.a + 1) + " " + std::to_string(nd.b + 1);
    if (has_const(nd.tag)) {
      out += " ";
      append_double(out, nd.c);
    }
    out += "\n";
  }
  return out;
}

Graph deserialize(std::string_view text) {
  int line_no = 0;
  std::size_t pos = 0;
  int n = 0, m = 0, ell = 0;
  std::vector<Graph::Node> ops;
  bool saw_header = false;
  int expect_k = 0;

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line;
    if (eol == std::string_view::npos) {
      line = text.substr(pos);
      pos = text.size() + 1;
    } else {
      line = text.substr(pos, eol - pos);
      pos = eol + 1;
    }
    if (line.empty()) {
      if (pos > text.size()) break;  // trailing newline
      parse_fail(line_no + 1, "empty line");
    }
    ++line_no;
    auto fields = split_fields(line);

    if (!saw_header) {
      if (fields.size() != 4 || fields[0] != "graph")
        parse_fail(line_no, "expected 'graph <n> <m> <ell>'");
      n = static_cast<int>(parse_int(fields[1], line_no));
      m = static_cast<int>(parse_int(fields[2], line_no));
      ell = static_cast<int>(parse_int(fields[3], line_no));
      if (n < 1 || m < 1 || ell < n + m)
        parse_fail(line_no, "inconsistent header counts");
      saw_header = true;
      expect_k = n + 1;
      continue;
    }

    if (fields.size() < 5 || fields[0] != "node")
      parse_fail(line_no, "expected 'node <k> <tag> <a> <b> [<const>]'");
    long k = parse_int(fields[1], line_no);
    if (k != expect_k)
      parse_fail(line_no, "expected node " + std::to_string(expect_k) +
                              ", got " + std::to_string(k));
    auto tag = op_from_name(fields[2]);
    if (!tag) parse_fail(line_no, "unknown op tag '" + std::string(fields[2]) + "'");
    long a = parse_int(fields[3], line_no);
    long b = parse_int(fields[4], line_no);
    Graph::Node nd;
    nd.tag = *tag;
    int ar = arity(*tag);
    if (ar == 0) {
      if (a != 0 || b != 0) parse_fail(line_no, "const node takes operands 0 0");
      nd.a = nd.b = -1;
    } else {
      if (a < 1 || a >= k || b < 1 || b >= k)
        parse_fail(line_no, "operand index out of range");
      if (ar == 1 && a != b)
        parse_fail(line_no, "unary node with distinct operand slots");
      nd.a = static_cast<std::int32_t>(a - 1);
      nd.b = static_cast<std::int32_t>(b - 1);
    }
    if (has_const(*tag)) {
      if (fields.size() != 6) parse_fail(line_no, "missing constant field");
      nd.c = parse_double(fields[5], line_no);
    } else {
      if (fields.size() != 5) parse_fail(line_no, "unexpected extra field");
    }
    ops.push_back(nd);
    ++expect_k;
  }

  if (!saw_header) parse_fail(1, "missing header");
  if (expect_k != ell + 1)
    parse_fail(line_no + 1, "expected " + std::to_string(ell - n) +
                                " node lines, got " +
                                std::to_string(expect_k - n - 1));
  try {
    return Graph(n, m, std::move(ops));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("deserialize: ") + e.what());
  }
}

}  // namespace sparsead
