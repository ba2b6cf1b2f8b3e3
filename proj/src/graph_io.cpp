#include "melodynet/graph_io.hpp"

namespace melodynet {

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_graphml(const NoteNetwork& net) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  out += "  <key id=\"d0\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n";
  out += "  <key id=\"d1\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n";
  out += "  <graph id=\"G\" edgedefault=\"directed\">\n";
  for (int i = 0; i < net.node_count(); ++i) {
    out += "    <node id=\"n" + std::to_string(i) + "\"><data key=\"d0\">" +
           xml_escape(net.labels[i]) + "</data></node>\n";
  }
  for (const auto& e : net.edges) {
    out += "    <edge source=\"n" + std::to_string(e.source) + "\" target=\"n" +
           std::to_string(e.target) + "\"><data key=\"d1\">" + std::to_string(e.weight) +
           "</data></edge>\n";
  }
  out += "  </graph>\n";
  out += "</graphml>\n";
  return out;
}

std::string to_dot(const NoteNetwork& net) {
  std::string out;
  out += "digraph \"" + dot_escape(net.track_ref.artist) + " - " +
         dot_escape(net.track_ref.title) + "\" {\n";
  for (int i = 0; i < net.node_count(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(net.labels[i]) + "\"];\n";
  }
  for (const auto& e : net.edges) {
    out += "  n" + std::to_string(e.source) + " -> n" + std::to_string(e.target) + " [weight=" +
           std::to_string(e.weight) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace melodynet
