"""Synchronization endpoints: wrapper runs, signal oracle and block families."""

import json
import time

from fastapi import APIRouter, HTTPException, Request

from ...automata.solvers import SOLVERS, BaselineSolver, get_solver
from ...bounds.family import (
    arrangement_at,
    arrangement_count,
    block_family_instance,
    choose_family_params,
    closed_form_roundtrip,
    sample_arrangement_indices,
)
from ...bounds.signals import instance_count, mu_reference, round_trip, uniform_transfer_time
from ...errors import BudgetExceededError, HorizonExceededError, MsfsspError
from ...monitoring import get_logger, log_sync_report
from ...msca.kernel import PeriodAssignment
from ...settings import get_settings
from ...wrapper.runner import SyncReport, run_msfssp
from ..database import save_run
from ..schemas import (
    FamilyInstance,
    FamilyRequest,
    FamilyResponse,
    OracleRequest,
    OracleResponse,
    SimulateRequest,
    SimulateResponse,
)

logger = get_logger()

router = APIRouter(prefix="/sync", tags=["sync"])


def reject(errors: list[str], message: str = "Request rejected due to validation errors"):
    raise HTTPException(status_code=400, detail={"message": message, "errors": errors})


def validate_sync_request(assignment: PeriodAssignment, solver: BaselineSolver) -> tuple[list, list]:
    """
    Checks before running the wrapper.
    Returns (errors, warnings) - errors block the run, warnings are advisory.
    """
    errors = []
    warnings = []

    if not solver.supports(assignment.k):
        errors.append(
            f"k = {assignment.k} virtual cells exceeds the capacity of solver {solver.name!r} ({solver.max_length})"
        )

    if assignment.g > 1:
        warnings.append(f"Periods share the factor {assignment.g}; the run behaves like the quotient instance")

    if assignment.t_c > assignment.k:
        warnings.append(f"Cycle length t_c = {assignment.t_c} exceeds k = {assignment.k}; firing waits for a full cycle")

    return errors, warnings


def report_passed(report: SyncReport) -> bool:
    return (
        report.simultaneous
        and not report.early_fire
        and report.timing_exact
        and report.within_bound
        and report.collect_ok
        and report.fire_coherent
    )


@router.get("/solvers")
async def list_solvers():
    """Built-in baseline solvers."""
    return {"solvers": list(SOLVERS)}


@router.post("/simulate", response_model=SimulateResponse)
async def simulate(request: SimulateRequest, req: Request):
    """
    Run the multi-speed wrapper on an instance.

    Returns the report summary with timing checks against t_c*ceil(T(k)/t_c)+1 and 2k+t_c.
    """
    start_time = time.time()
    data = request.model_dump()

    if data["solver"] not in SOLVERS:
        reject([f"unknown solver {data['solver']!r}; choose one of {', '.join(SOLVERS)}"])

    try:
        assignment = PeriodAssignment.of(data["periods"], period_set=data["period_set"])
    except MsfsspError as e:
        logger.warning(f"Rejected instance {data['periods']}: {e}")
        reject([str(e)])

    solver = get_solver(data["solver"])
    errors, warnings = validate_sync_request(assignment, solver)
    if errors:
        logger.warning(f"Instance {data['periods']} rejected: {errors}")
        reject(errors)

    logger.info(f"Simulation request: periods={data['periods']} solver={data['solver']}")
    report = run_msfssp(assignment, solver, horizon=data["horizon"], name=data["name"])
    if report.horizon_exceeded:
        error = HorizonExceededError(report.horizon)
        logger.warning(f"Instance {data['periods']}: {error}")
        raise HTTPException(status_code=422, detail={"message": str(error), "errors": [str(error)]})

    response_time_ms = (time.time() - start_time) * 1000
    summary = report.summary()
    passed = report_passed(report)

    logger.info(
        f"Instance {data['periods']}: fire_time={report.fire_time}, predicted={report.predicted}, "
        f"passed={passed}, response_time={response_time_ms:.2f}ms"
    )
    log_sync_report({**summary, "response_time_ms": round(response_time_ms, 2)})

    client_ip = req.client.host if req.client else None
    try:
        save_run(summary, passed, request_ip=client_ip, response_time_ms=response_time_ms)
    except Exception as e:
        logger.error(f"Failed to save run to database: {e}")

    return SimulateResponse(
        summary=summary,
        timing_exact=report.timing_exact,
        within_bound=report.within_bound,
        warnings=warnings,
        response_time_ms=round(response_time_ms, 2),
    )


@router.post("/oracle", response_model=OracleResponse)
async def oracle(request: OracleRequest):
    """Earliest-arrival schedule of a signal sent from cell 1 to cell n and back."""
    try:
        assignment = PeriodAssignment.of(request.periods, period_set=request.period_set)
        schedule = round_trip(assignment)
    except MsfsspError as e:
        reject([str(e)])

    return OracleResponse(
        periods=list(assignment.periods),
        arrivals=list(schedule.arrivals),
        returns=list(schedule.returns),
        round_trip_time=schedule.round_trip_time,
        mu_reference=mu_reference(assignment),
        uniform_transfer_time=uniform_transfer_time(assignment.n, assignment.p_max),
        instance_count=instance_count(assignment.period_set, assignment.n),
    )


@router.post("/family", response_model=FamilyResponse)
async def family(request: FamilyRequest):
    """Block-family instances with their closed-form and oracle round trips."""
    try:
        params = choose_family_params(request.period_set, request.m, head=request.head)
        total = arrangement_count(request.m)
        if request.select == "all":
            budget = get_settings().budget
            if total > budget:
                raise BudgetExceededError(total, budget)
            indices = range(total)
        elif request.select == "random":
            indices = sample_arrangement_indices(request.m, request.count, seed=request.seed)
        else:
            indices = [request.index]

        instances = []
        for i in indices:
            word = arrangement_at(request.m, i)
            assignment = block_family_instance(params, word)
            instances.append(
                FamilyInstance(
                    index=i,
                    arrangement=list(word),
                    periods=list(assignment.periods),
                    closed_form_roundtrip=closed_form_roundtrip(assignment),
                    round_trip_time=round_trip(assignment).round_trip_time,
                )
            )
    except BudgetExceededError as e:
        raise HTTPException(status_code=422, detail={"message": str(e), "errors": [str(e)]})
    except MsfsspError as e:
        logger.warning(f"Family request rejected: {json.dumps(request.model_dump())}: {e}")
        reject([str(e)])

    return FamilyResponse(params=params.as_dict(), arrangement_count=total, instances=instances)
