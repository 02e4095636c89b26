#pragma once

// Derived-operator expansion into core syntax. Line arguments are bodies
// under one interval binder (index 0). Every expansion is pure syntax; the
// output contains only core constructors.

#include "mcube/diagnostics.hpp"
#include "mcube/term.hpp"

namespace mcube {

// transport A p := transp A 0 p
inline Term m_transport(const std::string& iname, const Term& line_body, const Term& arg) {
  return t_transp(iname, line_body, izero(), arg);
}

// refl a := <_> a
inline Term m_refl(const Term& a) { return t_plam("_", tshift_ivar(a, 1)); }

// transportRefl A t := <m> transp (\_. A) m t  : Path A (transport A t) t
inline Term m_transport_refl(const Term& type, const Term& arg) {
  return t_plam("m", t_transp("_", tshift_ivar(type, 2), ivar(0), tshift_ivar(arg, 1)));
}

// transpFiller A phi t := <m> transp (\j. A (m /\ j)) (~m \/ phi) t
// : PathP A t (transp A phi t)
inline Term m_transp_filler(const Term& line_body, const IExpr& phi, const Term& arg) {
  Term inner_line = inst_ivar(tshift_ivar(line_body, 3, 1), imeet(ivar(1), ivar(0)));
  IExpr phi1 = ijoin(ineg(ivar(0)), ishift(phi, 1));
  return t_plam("m", t_transp("j", inner_line, phi1, tshift_ivar(arg, 1)));
}

// comp A [sys] base := hcomp (A 1) [sides forward-transported] (transp A 0 base)
inline Term m_comp(const std::string& iname, const Term& line_body, const System& sys,
                   const Term& base) {
  System out;
  for (const Branch& br : sys) {
    // side binds k; wrap: transp (\j. A (k \/ j)) k side
    Term fwd_line = inst_ivar(tshift_ivar(line_body, 3, 1), ijoin(ivar(1), ivar(0)));
    out.push_back(Branch{br.face, t_transp("j", fwd_line, ivar(0), br.side), br.iname});
  }
  Term lid_type = inst_ivar(line_body, ione());
  Term moved_base = t_transp(iname, line_body, izero(), base);
  return t_hcomp(lid_type, system_extent(out), std::move(out), moved_base);
}

// hfill A [sys] base r := hcomp A [sides weakened to r /\ k, (r=0) -> \_. base] base
inline Term m_hfill(const Term& type, const System& sys, const Term& base, const IExpr& dir) {
  if (dir->tag != ITag::Var)
    throw DiagError(Diagnostic{Severity::Error, 0, 0, "hfill direction must be a variable"});
  uint32_t r = dir->var;
  System out;
  for (const Branch& br : sys) {
    Term weakened = detail::transform(
        br.side, 0, 0, [](uint32_t i, uint32_t, uint32_t) { return t_var(i); },
        [&](const IExpr& e, uint32_t, uint32_t id) {
          return isubst(e, id, imeet(ivar(r + 1 + id), ivar(id)));
        });
    out.push_back(Branch{br.face, weakened, br.iname});
  }
  out.push_back(Branch{Face{FaceAtom{r, false}}, tshift_ivar(base, 1), "_"});
  return t_hcomp(type, system_extent(out), std::move(out), base);
}

// J C d p := transp (\i. C (p @ i) (<m> p @ (i /\ m))) 0 d
// where C is a function of the endpoint and the path.
inline Term m_J(const Term& motive, const Term& d, const Term& p) {
  Term p1 = tshift_ivar(p, 1);
  Term p2 = tshift_ivar(p, 2);
  Term line = t_app(t_app(tshift_ivar(motive, 1), t_papp(p1, ivar(0))),
                    t_plam("m", t_papp(p2, imeet(ivar(1), ivar(0)))));
  return t_transp("i", line, izero(), d);
}

}  // namespace mcube
