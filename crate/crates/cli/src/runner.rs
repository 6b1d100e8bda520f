//! Task planning and the bounded worker pool. Tasks are pure; reports are
//! merged back in plan order so output bytes are independent of scheduling.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use glhat::checks::{run_check, CheckReport};
use glhat::scalar::ParamPoint;

use crate::config::RunConfig;

/// One (check, rank, parameter point) cell of the run matrix.
#[derive(Debug, Clone)]
pub struct Task {
    pub check_id: String,
    pub n: usize,
    pub point_index: usize,
}

/// The full plan: every selected check at every (rank, point) combination.
pub fn plan(cfg: &RunConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for check_id in &cfg.checks {
        for &n in &cfg.n_list {
            for point_index in 0..cfg.param_points.len() {
                tasks.push(Task {
                    check_id: check_id.clone(),
                    n,
                    point_index,
                });
            }
        }
    }
    tasks
}

/// Executes the plan on a bounded pool and returns reports in plan order.
pub fn execute(cfg: &RunConfig) -> Vec<CheckReport> {
    let tasks = plan(cfg);
    let check_cfg = cfg.check_config();
    let points: Vec<ParamPoint> = cfg
        .n_list
        .iter()
        .flat_map(|&n| {
            cfg.param_points.iter().map(move |(e1, e2)| {
                ParamPoint::new(e1.clone(), e2.clone(), n, true)
                    .expect("points validated during configuration")
            })
        })
        .collect();
    let point_for = |task: &Task| -> &ParamPoint {
        let rank_index = cfg
            .n_list
            .iter()
            .position(|&n| n == task.n)
            .expect("task rank comes from the plan");
        &points[rank_index * cfg.param_points.len() + task.point_index]
    };

    let slots: Vec<Mutex<Option<CheckReport>>> =
        tasks.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = cfg.jobs.min(tasks.len()).max(1);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= tasks.len() {
                    break;
                }
                let task = &tasks[idx];
                let report = run_check(&task.check_id, task.n, Some(point_for(task)), &check_cfg);
                *slots[idx].lock().unwrap() = Some(report);
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.into_inner().unwrap().expect("every task ran"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{resolve, RawSettings};
    use glhat::checks::CheckStatus;

    #[test]
    fn plan_covers_the_matrix() {
        let mut raw = RawSettings::default();
        raw.set("n", "3,4");
        raw.set("checks", "formula1,zero_to_k");
        let cfg = resolve(&raw).unwrap();
        let tasks = plan(&cfg);
        assert_eq!(tasks.len(), 2 * 2 * 3);
        assert_eq!(tasks[0].check_id, "formula1");
    }

    #[test]
    fn execution_is_order_deterministic() {
        let mut raw = RawSettings::default();
        raw.set("n", "3");
        raw.set("checks", "formula1,iji_pre,zero_to_k");
        raw.set("jobs", "3");
        raw.set("s-range", "-2,2");
        raw.set("trunc", "8");
        raw.set("m-max", "1");
        let cfg = resolve(&raw).unwrap();
        let a = execute(&cfg);
        let b = execute(&cfg);
        assert_eq!(a.len(), 9);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.check_id, y.check_id);
            assert_eq!(x.n, y.n);
            assert!(matches!(x.status, CheckStatus::Pass));
            assert_eq!(x.counterexample, y.counterexample);
        }
    }
}
