use super::weyl::{induced_action_on_model, model_perm_name, ModelPerm, WeylGroup};
use super::G2Error;
use crate::cert::Certificate;
use crate::geom::chain::{model_action, LambdaChain};
use crate::geom::{check_equivariant, MonomialAction, RationalMapDescriptor};

fn model_pairs(map: &RationalMapDescriptor, perms: &[ModelPerm]) -> Result<Vec<(MonomialAction, MonomialAction)>, G2Error> {
    perms
        .iter()
        .map(|p| {
            let name = model_perm_name(p);
            Ok((model_action(&name, p, map.source())?, model_action(&name, p, map.target())?))
        })
        .collect()
}

/// Every element of W commutes with the quotient map and with both
/// directions of every link of the chain.
pub fn certify_chain_equivariance(chain: &LambdaChain, group: &WeylGroup) -> Result<Certificate, G2Error> {
    let mut cert = Certificate::new("W-equivariance of the chain");
    let perms = group.elements.iter().map(induced_action_on_model).collect::<Result<Vec<_>, _>>()?;

    let pairs = group
        .elements
        .iter()
        .zip(&perms)
        .map(|(g, p)| Ok((g.chart_action(chain.chart.ring()), model_action(&model_perm_name(p), p, &chain.lambda1)?)))
        .collect::<Result<Vec<_>, G2Error>>()?;
    cert.absorb(check_equivariant(&chain.quotient, &pairs)?);

    for link in chain.links() {
        for map in [link.forward, link.backward] {
            cert.absorb(check_equivariant(map, &model_pairs(map, &perms)?)?);
        }
    }
    if cert.passed {
        cert.record(format!("{} elements on the quotient map and 6 link maps", group.order()));
    }
    Ok(cert)
}

/// Checks `map` against mismatched actions: `perm` on the source, `other` on the target.
pub fn mismatched_equivariance(map: &RationalMapDescriptor, perm: &ModelPerm, other: &ModelPerm) -> Result<Certificate, G2Error> {
    let s = model_action(&model_perm_name(perm), perm, map.source())?;
    let t = model_action(&model_perm_name(other), other, map.target())?;
    Ok(check_equivariant(map, &[(s, t)])?)
}
