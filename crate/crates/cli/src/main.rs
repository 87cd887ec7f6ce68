mod cli;
mod report;

use std::process::ExitCode;

use clap::Parser;
use netgame_core::centrality::{katz_bonacich, spectral_bound};
use netgame_core::equilibrium::{
    solve_alt_payoff, solve_efficient, solve_equilibrium, solve_i_dagger, solve_i_prime_on,
    EquilibriumProfile, SignalParams,
};
use netgame_core::graph::{validate, IntensityProfile};
use netgame_core::montecarlo::{
    best_response_audit, simulate, slope_sum_audit, weights_for, SimConfig,
};
use netgame_core::payoff::profile_payoffs;
use netgame_core::regions::{scan, GridSpec};
use netgame_core::welfare::{
    alt_delta_welfare, connectivity_reversal, delta_welfare, marginal_value, sharing_inefficiency,
};
use netgame_core::Network;
use serde_json::json;

use cli::{Cli, Command, Format, VariantArgs, VariantName};
use report::{label, Report, Table};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] netgame_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(netgame_core::Error::Numerical { .. }) => 3,
            _ => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("netgame: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Validate { net, out } => {
            let net = net.load()?;
            let violations = validate(&net);
            for v in &violations {
                eprintln!("netgame: {v}");
            }
            let mut table = Table::new(&["rule", "agent", "target", "value"]);
            for v in &violations {
                table.row(vec![
                    label(&v.rule),
                    v.agent.to_string(),
                    v.target.map(|t| t.to_string()).unwrap_or_default(),
                    report::num(v.value),
                ]);
            }
            let body = json!({
                "n": net.n(),
                "valid": violations.is_empty(),
                "violations": violations,
                "spectral": spectral_bound(&net),
                "out_degrees": net.out_degrees(),
                "in_degrees": net.in_degrees(),
            });
            Report::new("validate", body, table).write(&out)?;
            Ok(if violations.is_empty() { 0 } else { 2 })
        }
        Command::Centrality { net, sig, out } => {
            let net = net.load()?;
            let gamma = sig.params()?.require_public()?;
            let cent = katz_bonacich(&net, gamma)?;
            let mut table = Table::new(&["agent", "c", "sensitivity"]);
            for i in 0..net.n() {
                table.row(vec![
                    i.to_string(),
                    report::num(cent.c[i]),
                    report::num(cent.sensitivity[i]),
                ]);
            }
            Report::new("centrality", json!(cent), table).write(&out)?;
            Ok(0)
        }
        Command::Equilibrium {
            net,
            sig,
            variant,
            out,
        } => {
            let net = net.load()?;
            let sig = sig.params()?;
            let profile = solve_variant(&net, &sig, &variant)?;
            let mut table = Table::new(&["agent", "source", "slope_public", "slope_private"]);
            for i in 0..profile.n() {
                table.row(vec![
                    i.to_string(),
                    label(&profile.sources[i]),
                    report::num(profile.slopes_public[i]),
                    report::num(profile.slopes_private[i]),
                ]);
            }
            Report::new("equilibrium", json!(profile), table).write(&out)?;
            Ok(0)
        }
        Command::Payoffs {
            net,
            sig,
            variant,
            out,
        } => {
            let net = net.load()?;
            let sig = sig.params()?;
            let profile = solve_variant(&net, &sig, &variant)?;
            let payoffs = profile_payoffs(&weights_for(&net, &profile)?, &profile, &sig)?;
            let mut table = Table::new(&["agent", "payoff"]);
            for (i, &u) in payoffs.per_agent.iter().enumerate() {
                table.row(vec![i.to_string(), report::num(u)]);
            }
            let body = json!({ "variant": profile.variant, "payoffs": payoffs });
            Report::new("payoffs", body, table).write(&out)?;
            Ok(0)
        }
        Command::Welfare { net, sig, r, out } => {
            let net = net.load()?;
            let sig = sig.params()?;
            let mut table = Table::new(&["agent", "delta_u", "harmed"]);
            let body = match r {
                None => {
                    let rep = delta_welfare(&net, &sig)?;
                    for (i, &d) in rep.delta_u.iter().enumerate() {
                        let harmed = u8::from(rep.harmed.contains(&i));
                        table.row(vec![i.to_string(), report::num(d), harmed.to_string()]);
                    }
                    json!(rep)
                }
                Some(r) => {
                    let r = intensities(&net, r)?;
                    let rep = alt_delta_welfare(&net, &r, &sig)?;
                    for (i, &d) in rep.delta_u.iter().enumerate() {
                        let harmed = u8::from(d < 0.0);
                        table.row(vec![i.to_string(), report::num(d), harmed.to_string()]);
                    }
                    json!(rep)
                }
            };
            Report::new("welfare", body, table).write(&out)?;
            Ok(0)
        }
        Command::Marginal { net, sig, out } => {
            let net = net.load()?;
            let rep = marginal_value(&net, &sig.params()?)?;
            let mut table = Table::new(&[
                "gamma",
                "statistic_s",
                "statistic_s_prime",
                "derivative",
                "marginal_sign",
            ]);
            table.row(vec![
                report::num(rep.gamma),
                report::num(rep.statistic_s),
                report::num(rep.statistic_s_prime),
                report::num(rep.derivative),
                label(&rep.marginal_sign),
            ]);
            Report::new("marginal", json!(rep), table).write(&out)?;
            Ok(0)
        }
        Command::Share {
            net,
            sig,
            holder,
            out,
        } => {
            let net = net.load()?;
            let rep = sharing_inefficiency(&net, &sig.params()?, holder)?;
            let mut table = Table::new(&[
                "holder",
                "holder_statistic",
                "holder_prefers_private",
                "statistic_s",
                "disclosure_cutoff",
                "society_prefers_public",
                "inefficient",
            ]);
            table.row(vec![
                rep.holder.to_string(),
                report::num(rep.holder_statistic),
                rep.holder_prefers_private.to_string(),
                report::num(rep.statistic_s),
                report::num(rep.disclosure_cutoff),
                rep.society_prefers_public.to_string(),
                rep.inefficient.to_string(),
            ]);
            Report::new("share", json!(rep), table).write(&out)?;
            Ok(0)
        }
        Command::Region {
            kind,
            gamma,
            l,
            m,
            tsv,
            out,
        } => {
            let grid = scan(kind, gamma, l, m, &GridSpec::default_for(kind))?;
            let mut text = Vec::new();
            if tsv {
                grid.write_tsv(&mut text)?;
            } else {
                match out.format.unwrap_or(Format::Csv) {
                    Format::Csv => grid.write_csv(&mut text)?,
                    Format::Json => {
                        let body = json!({
                            "kind": kind,
                            "gamma": gamma,
                            "l": l,
                            "m": m,
                            "alpha_axis": grid.alpha_axis,
                            "beta_axis": grid.beta_axis,
                            "count": grid.count(),
                            "members": grid.members().collect::<Vec<_>>(),
                        });
                        text = report::json_text("region", body).into_bytes();
                    }
                }
            }
            report::emit(&out, &text)?;
            Ok(0)
        }
        Command::Reversal { n, gamma, out } => {
            let w = connectivity_reversal(n, gamma)?;
            let mut table = Table::new(&[
                "n",
                "gamma",
                "l",
                "m",
                "alpha",
                "beta",
                "statistic_sparse",
                "statistic_dense",
            ]);
            table.row(vec![
                n.to_string(),
                report::num(w.gamma),
                w.params.l.to_string(),
                w.params.m.to_string(),
                report::num(w.params.alpha),
                report::num(w.params.beta),
                report::num(w.statistic_sparse),
                report::num(w.statistic_dense),
            ]);
            Report::new("reversal", json!(w), table).write(&out)?;
            Ok(0)
        }
        Command::Simulate {
            net,
            sig,
            variant,
            draws,
            seed,
            audit,
            out,
        } => {
            let net = net.load()?;
            let sig = sig.params()?;
            let profile = solve_variant(&net, &sig, &variant)?;
            let cfg = SimConfig::new(draws, seed, sig)?;
            let sim = simulate(&net, &profile, &cfg)?;
            if out.format == Some(Format::Csv) {
                let mut text = Vec::new();
                sim.write_batch_csv(&mut text)?;
                report::emit(&out, &text)?;
                return Ok(0);
            }
            let closed = profile_payoffs(&weights_for(&net, &profile)?, &profile, &sig)?;
            let z: Vec<f64> = (0..net.n())
                .map(|i| (sim.payoff_mean[i] - closed.per_agent[i]) / sim.payoff_se[i])
                .collect();
            let mut body = json!({
                "config": cfg,
                "variant": profile.variant,
                "closed_form": closed.per_agent,
                "z": z,
                "result": sim,
            });
            if audit {
                body["best_response"] = json!(best_response_audit(&net, &profile, &cfg)?);
                body["slope_sums"] = json!(slope_sum_audit(&net, &profile, &cfg)?);
            }
            report::emit(&out, report::json_text("simulate", body).as_bytes())?;
            Ok(0)
        }
    }
}

fn intensities(net: &Network, r: Vec<f64>) -> Result<IntensityProfile, CliError> {
    Ok(match r.as_slice() {
        [v] => IntensityProfile::uniform(net.n(), *v)?,
        _ if r.len() == net.n() => IntensityProfile::new(r)?,
        _ => {
            return Err(CliError::Usage(format!(
                "--r takes one value or {} values, got {}",
                net.n(),
                r.len()
            )))
        }
    })
}

fn solve_variant(
    net: &Network,
    sig: &SignalParams,
    args: &VariantArgs,
) -> Result<EquilibriumProfile, CliError> {
    if args.holder.is_some() && args.variant != VariantName::IDagger {
        return Err(CliError::Usage(
            "--holder only applies to --variant i-dagger".into(),
        ));
    }
    if args.r.is_some() && args.variant != VariantName::Alt {
        return Err(CliError::Usage("--r only applies to --variant alt".into()));
    }
    Ok(match args.variant {
        VariantName::Baseline => solve_equilibrium(net, sig)?,
        VariantName::IPrime => solve_i_prime_on(net, sig.require_public()?)?,
        VariantName::IDagger => {
            let holder = args
                .holder
                .ok_or_else(|| CliError::Usage("--variant i-dagger needs --holder".into()))?;
            solve_i_dagger(net, sig, holder)?
        }
        VariantName::Alt => {
            let r = args
                .r
                .clone()
                .ok_or_else(|| CliError::Usage("--variant alt needs --r".into()))?;
            solve_alt_payoff(net, &intensities(net, r)?, sig)?
        }
        VariantName::Efficient => solve_efficient(net, sig)?,
        VariantName::NoPublic => {
            let violations = validate(net);
            if let Some(v) = violations.first() {
                return Err(netgame_core::Error::InvalidNetwork(v.to_string()).into());
            }
            EquilibriumProfile::no_public(net.n())
        }
    })
}
