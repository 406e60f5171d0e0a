//! The intertwining relation and the quantum integrals built from `𝒟` and its adjoint.

use super::{Check, Identity, Model, OpExpr, Suite};

fn leaf(m: &crate::weylops::DiffOp) -> OpExpr {
    OpExpr::leaf(m)
}

fn intertwining(m: &Model) -> Vec<Identity> {
    let lhs = OpExpr::Compose(vec![leaf(&m.h), leaf(&m.d)]);
    let rhs = OpExpr::Compose(vec![leaf(&m.d), leaf(&m.h0)]);
    vec![Identity::op(lhs, rhs)]
}

fn i6_order(m: &Model) -> Vec<Identity> {
    let dd = &m.d * &m.d.adjoint();
    let top = m.cms.dbeta_prod(&[0, 1, 2]);
    let mut out = vec![Identity::op(
        OpExpr::Leaf(dd.order_part(6)),
        OpExpr::Compose(vec![leaf(&top), leaf(&top)]).neg(),
    )];
    for k in 7..=9 {
        out.push(Identity::op(OpExpr::Leaf(dd.order_part(k)), OpExpr::zero()));
    }
    out
}

fn i6_comm(m: &Model) -> Vec<Identity> {
    let i6 = OpExpr::Compose(vec![leaf(&m.d), OpExpr::Adjoint(m.d.clone())]);
    vec![Identity::op(OpExpr::commutator(i6, leaf(&m.h)), OpExpr::zero())]
}

fn j6_comm(m: &Model) -> Vec<Identity> {
    let j6 = OpExpr::Compose(vec![OpExpr::Adjoint(m.d.clone()), leaf(&m.d)]);
    vec![Identity::op(OpExpr::commutator(j6, leaf(&m.h0)), OpExpr::zero())]
}

fn k_comm(m: &Model) -> Vec<Identity> {
    let k = OpExpr::Compose(vec![leaf(&m.d), leaf(&m.h0), OpExpr::Adjoint(m.d.clone())]);
    vec![Identity::op(OpExpr::commutator(k, leaf(&m.h)), OpExpr::zero())]
}

pub fn checks() -> Vec<Check> {
    vec![
        Check::new("intertwining", Suite::Intertwine, intertwining),
        Check::new("I6.order", Suite::Integral, i6_order),
        Check::new("I6.comm", Suite::Integral, i6_comm),
        Check::new("J6.comm", Suite::Integral, j6_comm),
        Check::new("K.comm", Suite::Integral, k_comm),
    ]
}
