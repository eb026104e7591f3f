#pragma once

#include <string>
#include <vector>

#include "dilp/bounds.hpp"
#include "dilp/problem.hpp"

namespace dilp {

enum class InstanceForm { IlpCf, BilpCf, IlpSf, BilpSf, Group };
InstanceForm parse_form(const std::string& s);
const char* to_string(InstanceForm f);

// One instance file. Only the member matching `form` is meaningful.
struct InstanceFile {
  InstanceForm form = InstanceForm::IlpCf;
  CanonicalInstance cf;
  StandardInstance sf;
  GroupInstance group;
  std::string comment;
  std::vector<BoundEntry> report;

  bool canonical() const { return form == InstanceForm::IlpCf || form == InstanceForm::BilpCf; }
  bool standard() const { return form == InstanceForm::IlpSf || form == InstanceForm::BilpSf; }
  int n() const;
};

InstanceFile wrap(const CanonicalInstance& I);  // form from b_l; mixed b_l is a parse error
InstanceFile wrap(const StandardInstance& I);   // form from u; mixed u is a parse error
InstanceFile wrap(const GroupInstance& I);

// Structure errors raise ErrorKind::Parse; with check set, validate() findings raise Precondition.
InstanceFile parse_instance(const std::string& text, bool check = true);
InstanceFile read_instance(const std::string& path, bool check = true);
std::string write_instance(const InstanceFile& f);

}  // namespace dilp
