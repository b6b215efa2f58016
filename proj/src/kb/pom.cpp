// Maven POM ingestion: project/dependencies/dependency/{groupId,artifactId,version}.

#include <boost/property_tree/detail/rapidxml.hpp>
#include <cctype>
#include <map>

#include "fqnres/error.hpp"
#include "fqnres/knowledge_base.hpp"
#include "text_util.hpp"

namespace fqnres::kb {
namespace {

namespace rx = boost::property_tree::detail::rapidxml;
using Node = rx::xml_node<char>;

std::string text_of(const Node* node) {
  return std::string(detail::trim(std::string_view(node->value(), node->value_size())));
}

const Node* child(const Node* parent, const char* name) {
  return parent->first_node(name);
}

// Expands ${name} references from <properties> and the project's own version.
std::string expand(const std::string& value, const std::map<std::string, std::string>& props) {
  std::string out;
  std::size_t pos = 0;
  while (pos < value.size()) {
    auto start = value.find("${", pos);
    if (start == std::string::npos) break;
    auto close = value.find('}', start);
    if (close == std::string::npos) break;
    out.append(value, pos, start - pos);
    auto name = value.substr(start + 2, close - start - 2);
    auto it = props.find(name);
    out += it != props.end() ? it->second : value.substr(start, close - start + 1);
    pos = close + 1;
  }
  out.append(value, pos);
  return out;
}

std::string sanitize_id(std::string id) {
  for (auto& c : id)
    if (std::isspace(static_cast<unsigned char>(c))) c = '_';
  return id;
}

}  // namespace

ProjectItemset KnowledgeBase::ingest_pom(const std::filesystem::path& path) {
  return ingest_pom_text(detail::read_file(path), path.string());
}

ProjectItemset KnowledgeBase::ingest_pom_text(std::string_view xml, const std::string& source_name) {
  std::string buffer(xml);
  buffer.push_back('\0');
  const char* base = buffer.data();

  rx::xml_document<char> doc;
  try {
    doc.parse<rx::parse_validate_closing_tags | rx::parse_trim_whitespace>(buffer.data());
  } catch (const rx::parse_error& e) {
    throw XmlError(source_name, static_cast<std::size_t>(e.where<char>() - base), e.what());
  }
  auto offset_of = [&](const Node* n) { return static_cast<std::size_t>(n->name() - base); };

  const Node* project = doc.first_node();
  if (!project || std::string_view(project->name(), project->name_size()) != "project")
    throw XmlError(source_name, project ? offset_of(project) : 0, "root element is not <project>");

  std::map<std::string, std::string> props;
  if (auto* p = child(project, "properties"))
    for (auto* n = p->first_node(); n; n = n->next_sibling())
      props[std::string(n->name(), n->name_size())] = text_of(n);
  if (auto* v = child(project, "version")) props["project.version"] = text_of(v);

  ProjectItemset itemset;
  auto* g = child(project, "groupId");
  auto* a = child(project, "artifactId");
  auto* v = child(project, "version");
  if (g && a && v)
    itemset.project_id = sanitize_id(text_of(g) + ":" + text_of(a) + ":" + expand(text_of(v), props));
  else
    itemset.project_id = sanitize_id(source_name);

  if (auto* deps = child(project, "dependencies")) {
    for (auto* d = deps->first_node("dependency"); d; d = d->next_sibling("dependency")) {
      std::string parts[3];
      const char* names[3] = {"groupId", "artifactId", "version"};
      for (int i = 0; i < 3; ++i) {
        auto* c = child(d, names[i]);
        if (!c)
          throw XmlError(source_name, offset_of(d),
                         std::string("<dependency> is missing <") + names[i] + ">");
        parts[i] = expand(text_of(c), props);
      }
      DependencyCoordinate coord{parts[0], parts[1], parts[2]};
      try {
        coord.validate();
      } catch (const Error& e) {
        throw XmlError(source_name, offset_of(d), e.what());
      }
      itemset.dependencies.insert(std::move(coord));
    }
  }
  if (itemset.dependencies.empty())
    throw XmlError(source_name, offset_of(project), "project declares no dependencies");

  add_itemset(itemset);
  return itemset;
}

}  // namespace fqnres::kb
