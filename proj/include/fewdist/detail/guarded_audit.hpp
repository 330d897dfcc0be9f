#pragma once

#include <utility>

#include "fewdist/errors.hpp"

namespace fewdist {

template <class F>
AuditRecord guarded_audit(StatementId id, F&& audit) {
  try {
    return std::forward<F>(audit)();
  } catch (const FeasibilityError& e) {
    AuditRecord r;
    r.statement_id = id;
    r.error = e.what();
    r.feasibility_error = true;
    return r;
  } catch (const Error& e) {
    AuditRecord r;
    r.statement_id = id;
    r.error = e.what();
    return r;
  }
}

}  // namespace fewdist
