use g2rat_core::exec::Exec;
use g2rat_core::g2::{build_chevalley_algebra, build_weight_table, synthesize_weyl_group, ChevalleyAlgebra, WeightTable, WeylGroup};
use g2rat_core::geom::chain::{quotient_data, LambdaChain};
use g2rat_core::geom::QuotientData;
use g2rat_core::quadform::TwistData;

use crate::config::Config;

/// Shared objects built once, sequentially, before the checks run.
pub struct Context {
    pub config: Config,
    pub exec: Exec,
    pub twist: TwistData,
    pub table: WeightTable,
    pub group: Result<WeylGroup, String>,
    pub algebra: Result<ChevalleyAlgebra, String>,
    pub chain: Result<LambdaChain, String>,
    pub quotient: Result<QuotientData, String>,
}

impl Context {
    pub fn build(config: &Config, twist: TwistData) -> Self {
        let exec = config.exec;
        let table = build_weight_table();
        Context {
            config: config.clone(),
            exec,
            twist,
            group: synthesize_weyl_group(&table, exec).map_err(|e| e.to_string()),
            algebra: build_chevalley_algebra(exec).map_err(|e| e.to_string()),
            chain: LambdaChain::build().map_err(|e| e.to_string()),
            quotient: quotient_data().map_err(|e| e.to_string()),
            table,
        }
    }

    pub fn group(&self) -> Result<&WeylGroup, String> {
        self.group.as_ref().map_err(|e| format!("Weyl group unavailable: {e}"))
    }

    pub fn algebra(&self) -> Result<&ChevalleyAlgebra, String> {
        self.algebra.as_ref().map_err(|e| format!("Chevalley algebra unavailable: {e}"))
    }

    pub fn chain(&self) -> Result<&LambdaChain, String> {
        self.chain.as_ref().map_err(|e| format!("chain unavailable: {e}"))
    }

    pub fn quotient(&self) -> Result<&QuotientData, String> {
        self.quotient.as_ref().map_err(|e| format!("quotient data unavailable: {e}"))
    }
}
