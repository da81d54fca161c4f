use lrtables::oracle::{oracle_gl_invariants, oracle_osp_invariants};
use lrtables::osp::invariant_dim_summary;
use lrtables::{
    count_tables, enumerate_lrct, enumerate_sym_lrct, enumerate_tables, lrc_zero_summary, BigUint,
    Group, SymMarginSpec, TableSpec,
};

use crate::args::{Command, EitherArgs, GlArgs, GroupArg, OspArgs, TablesArgs};
use crate::error::CliError;
use crate::input::{parse_sym, GlInput};
use crate::output::{partition_strings, Response, TableOut};

/// A request whose inputs have all been parsed and checked.
enum Job {
    Gl(GlInput),
    Sym(SymMarginSpec, Group),
    Tables(TablesArgs, TableSpec),
}

enum Mode {
    Tables,
    Oracle,
    Crosscheck,
    Enumerate,
}

fn group_of(arg: GroupArg) -> Group {
    match arg {
        GroupArg::O => Group::Orthogonal,
        GroupArg::Sp => Group::Symplectic,
    }
}

fn gl_job(args: &GlArgs) -> Result<Job, CliError> {
    Ok(Job::Gl(GlInput::parse(
        &args.weights,
        args.target.as_deref(),
        args.n,
    )?))
}

fn either_job(args: &EitherArgs) -> Result<Job, CliError> {
    match (args.weights.is_empty(), args.margins.is_empty()) {
        (false, true) => {
            if args.group.is_some() {
                return Err(CliError::Invalid(
                    "--group applies only to --margins".into(),
                ));
            }
            Ok(Job::Gl(GlInput::parse(
                &args.weights,
                args.target.as_deref(),
                args.n,
            )?))
        }
        (true, false) => {
            if args.target.is_some() {
                return Err(CliError::Invalid(
                    "--target applies only to --weights".into(),
                ));
            }
            let group = group_of(args.group.unwrap_or_default());
            Ok(Job::Sym(parse_sym(&args.margins, args.n)?, group))
        }
        _ => Err(CliError::Invalid(
            "give exactly one of --weights or --margins".into(),
        )),
    }
}

fn tables_job(args: &TablesArgs) -> Result<Job, CliError> {
    let spec = if args.symmetric {
        if args.cols.as_ref().is_some_and(|c| c != &args.rows) {
            return Err(CliError::Invalid(
                "symmetric tables need equal row and column margins".into(),
            ));
        }
        TableSpec::symmetric(args.rows.clone())
    } else {
        let cols = args.cols.clone().unwrap_or_else(|| args.rows.clone());
        TableSpec::new(args.rows.clone(), cols)
    };
    Ok(Job::Tables(
        args.clone(),
        spec.hollow(args.hollow).with_cap(args.cap),
    ))
}

/// Validates the whole request, then computes it.
pub fn execute(command: &Command, emit_tables: bool) -> Result<Response, CliError> {
    let (name, job, mode) = match command {
        Command::Lrc(a) => ("lrc", gl_job(a)?, Mode::Tables),
        Command::Osp(OspArgs { group, margins, n }) => (
            "osp",
            Job::Sym(parse_sym(margins, *n)?, group_of(*group)),
            Mode::Tables,
        ),
        Command::Tables(a) => ("tables", tables_job(a)?, Mode::Tables),
        Command::Oracle(a) => ("oracle", either_job(a)?, Mode::Oracle),
        Command::Crosscheck(a) => ("crosscheck", either_job(a)?, Mode::Crosscheck),
        Command::Enumerate(a) => ("enumerate", either_job(a)?, Mode::Enumerate),
        Command::Batch => return Err(CliError::Invalid("batch requests cannot nest".into())),
    };
    let emit = emit_tables || matches!(mode, Mode::Enumerate);
    let mut out = Response {
        command: name,
        ..Response::default()
    };
    match job {
        Job::Gl(input) => gl(&input, mode, emit, &mut out)?,
        Job::Sym(m, group) => sym(&m, group, mode, emit, &mut out)?,
        Job::Tables(args, spec) => {
            out.value = count_tables(&spec).to_string();
            if emit {
                let listed: Vec<TableOut> =
                    enumerate_tables(&spec).map(TableOut::Integer).collect();
                out.table_count = Some(listed.len());
                out.tables = Some(listed);
            }
            out.cols = Some(spec_cols(&args));
            out.rows = Some(args.rows);
        }
    }
    Ok(out)
}

fn spec_cols(args: &TablesArgs) -> Vec<usize> {
    args.cols.clone().unwrap_or_else(|| args.rows.clone())
}

fn gl(input: &GlInput, mode: Mode, emit: bool, out: &mut Response) -> Result<(), CliError> {
    let margins = input.effective()?;
    out.weights = input
        .margins
        .weights()
        .iter()
        .map(ToString::to_string)
        .collect();
    out.target = input.target.as_ref().map(ToString::to_string);
    out.n = Some(margins.rank());
    out.stable_threshold = Some(margins.stable_threshold());
    if matches!(mode, Mode::Oracle) {
        out.value = oracle_gl_invariants(&margins).to_string();
        return Ok(());
    }
    let summary = lrc_zero_summary(&margins)?;
    out.value = summary.value.to_string();
    out.table_count = Some(summary.table_count);
    if matches!(mode, Mode::Crosscheck) {
        let oracle = oracle_gl_invariants(&margins);
        out.agreement = Some(oracle == summary.value);
        out.oracle_value = Some(oracle.to_string());
    }
    if emit {
        out.tables = Some(
            enumerate_lrct(&margins, true)
                .map(|(t, norm)| TableOut::partitions(&t, &norm))
                .collect(),
        );
    }
    Ok(())
}

fn sym(
    m: &SymMarginSpec,
    group: Group,
    mode: Mode,
    emit: bool,
    out: &mut Response,
) -> Result<(), CliError> {
    out.group = Some(match group {
        Group::Orthogonal => "o",
        Group::Symplectic => "sp",
    });
    out.margins = partition_strings(m.partitions());
    out.n = Some(m.rank());
    out.stable_threshold = Some(m.stable_threshold());
    if !m.in_stable_range() {
        return Err(lrtables::Error::OutsideStableRange {
            n: m.rank(),
            threshold: m.stable_threshold(),
            group: Some(group),
        }
        .into());
    }
    if matches!(mode, Mode::Oracle) {
        out.value = oracle_osp_invariants(m)?.to_string();
        return Ok(());
    }
    let summary = invariant_dim_summary(m, group)?;
    out.value = summary.value.to_string();
    out.table_count = Some(summary.table_count);
    if matches!(mode, Mode::Crosscheck) {
        let oracle: BigUint = oracle_osp_invariants(m)?;
        out.agreement = Some(oracle == summary.value);
        out.oracle_value = Some(oracle.to_string());
    }
    if emit {
        out.tables = Some(
            enumerate_sym_lrct(m, true)
                .map(|(t, norm)| TableOut::partitions(&t, &norm))
                .collect(),
        );
    }
    Ok(())
}
