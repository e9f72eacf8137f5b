use std::io::{self, Write};

use super::experiments::{BenchResult, ClosureRow, ConvergenceRow, RowStatus};
use crate::stepcontrol::{StepLog, Trajectory};

/// 17 significant digits, independent of locale.
pub fn float(v: f64) -> String {
    format!("{v:.16e}")
}

fn state_header(w: &mut dyn Write, dim: usize) -> io::Result<()> {
    write!(w, "t")?;
    for i in 1..=dim {
        write!(w, ",y{i}")?;
    }
    writeln!(w)
}

fn state_row(w: &mut dyn Write, t: f64, y: &[f64]) -> io::Result<()> {
    write!(w, "{}", float(t))?;
    for v in y {
        write!(w, ",{}", float(*v))?;
    }
    writeln!(w)
}

pub fn write_trajectory(w: &mut dyn Write, traj: &Trajectory<f64>) -> io::Result<()> {
    state_header(w, traj.dimension())?;
    for (t, y) in traj.rows() {
        state_row(w, t, y)?;
    }
    Ok(())
}

pub fn write_last(w: &mut dyn Write, t: f64, y: &[f64]) -> io::Result<()> {
    state_header(w, y.len())?;
    state_row(w, t, y)
}

/// Attempts in chronological order: a rejection shares its start time with
/// the attempt that follows it.
pub fn write_steplog(w: &mut dyn Write, log: &StepLog) -> io::Result<()> {
    writeln!(w, "kind,t,h,error")?;
    let mut j = 0;
    for i in 0..log.accepted_t.len() {
        while j < log.rejected_t.len() && log.rejected_t[j] <= log.accepted_t[i] {
            writeln!(
                w,
                "rejected,{},{},",
                float(log.rejected_t[j]),
                float(log.rejected_h[j])
            )?;
            j += 1;
        }
        writeln!(
            w,
            "accepted,{},{},{}",
            float(log.accepted_t[i]),
            float(log.accepted_h[i]),
            float(log.errors[i])
        )?;
    }
    for k in j..log.rejected_t.len() {
        writeln!(
            w,
            "rejected,{},{},",
            float(log.rejected_t[k]),
            float(log.rejected_h[k])
        )?;
    }
    Ok(())
}

pub fn write_closure_table(w: &mut dyn Write, group: u8, rows: &[ClosureRow]) -> io::Result<()> {
    writeln!(w, "method,group,closure_error,status")?;
    for r in rows {
        let e = r.closure_error.map(float).unwrap_or_default();
        writeln!(w, "{},{group},{e},{}", r.method, r.status.label())?;
    }
    Ok(())
}

pub fn write_convergence_table(
    w: &mut dyn Write,
    rows: &[(String, Result<ConvergenceRow, RowStatus>)],
) -> io::Result<()> {
    writeln!(w, "method,order,slope,slope_binary64,meets_order,errors,status")?;
    for (name, r) in rows {
        match r {
            Ok(r) => {
                let errors: Vec<String> = r.errors.iter().map(|e| float(*e)).collect();
                writeln!(
                    w,
                    "{},{},{},{},{},{},ok",
                    r.method,
                    r.order,
                    float(r.slope),
                    float(r.slope_binary64),
                    r.meets_order(),
                    errors.join(";")
                )?;
            }
            Err(status) => writeln!(w, "{name},,,,,,{}", status.label())?,
        }
    }
    Ok(())
}

pub fn write_bench(w: &mut dyn Write, r: &BenchResult) -> io::Result<()> {
    writeln!(
        w,
        "method,steps,generated_seconds,generic_seconds,ratio,max_difference"
    )?;
    writeln!(
        w,
        "{},{},{},{},{},{}",
        r.method,
        r.steps,
        float(r.generated.as_secs_f64()),
        float(r.generic.as_secs_f64()),
        float(r.ratio()),
        float(r.max_difference)
    )
}
