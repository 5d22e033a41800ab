"""
Interfaz de línea de comandos: raíces, grados de compatibilidad, clusters, abanico, expansión,
σ/τ, grupoide, censo y la batería de verificación.

Salida JSON determinista por stdout; los logs van a stderr.
Códigos de salida: 0 ok, 1 comprobación fallida, 2 uso, 3 límite de recursos.
"""

import functools
import json
import sys
from pathlib import Path
from typing import Optional

import click
import pandas as pd

from census import full_f_vector, f_plus_vector, moebius_consistency, orientation_invariance
from clusters import build_fan, cluster_expansion, enumerate_clusters, compatibility_matrix, require_rank_cap, verify_fan
from config.settings import settings
from contracts.quiver_contract import load_quiver
from decorated import sigma, tau
from exceptions.quiver_exceptions import (
    InvariantViolation,
    QuiverError,
    ResourceCapError,
)
from groupoid import Word, apply_word, check_lemmas, classify_loops, normal_form
from quiver import Quiver, almost_positive_roots, alternating_orientation, classify_tree, parse_dynkin_name
from quiver.dynkin import exponent_table
from quiver.roots import RootVector
from representations import all_indecomposables, rep_to_json
from utils.logger import Logger
from verification import DEFAULT_GRAPHS, EXHAUSTIVE_RANK, VerificationConfig, run_verify_suite

logger = Logger.get_logger(__name__)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def handle_errors(command):
    """Traduce las excepciones del dominio a códigos de salida."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ResourceCapError as e:
            click.echo(str(e), err=True)
            sys.exit(EXIT_RESOURCE)
        except InvariantViolation as e:
            click.echo(str(e), err=True)
            sys.exit(EXIT_CHECK_FAILED)
        except QuiverError as e:
            click.echo(str(e), err=True)
            sys.exit(EXIT_USAGE)
    return wrapper


def emit(data, fmt: str = "json", frame: Optional[pd.DataFrame] = None) -> None:
    if fmt == "csv" and frame is not None:
        click.echo(frame.to_csv(index=False), nl=False)
        return
    click.echo(json.dumps(data, ensure_ascii=False, indent=2))


def resolve_quiver(graph: str) -> Quiver:
    """Ruta a un JSON de carcaj, o nombre de Dynkin ('A3', 'D4', 'A2+A1') con su Γ₀."""
    if Path(graph).is_file():
        return load_quiver(graph)
    return alternating_orientation(parse_dynkin_name(graph))[0]


def parse_gamma(q: Quiver, text: str) -> RootVector:
    try:
        coords = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise click.BadParameter(f"'{text}' no es una lista de enteros separados por comas")
    if len(coords) != q.rank:
        raise click.BadParameter(f"γ necesita {q.rank} coordenadas, recibió {len(coords)}")
    return RootVector(q.vertices, coords)


graph_option = click.option("--graph", "graph", required=True,
                            help="Nombre de Dynkin (A3, D4, A2+A1) o ruta a un JSON de carcaj")
format_option = click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
large_option = click.option("--large", is_flag=True, help="Permite rangos por encima del límite configurado")


@click.group()
def cli():
    """
    Carcajes de Dynkin, representaciones decoradas y clusters.

    \b
    Entorno:
      QUIVER_SEED          semilla por defecto de todo el muestreo
    Solo para operadores:
      LOG_LEVEL            nivel de los logs en stderr (INFO)
      QUIVER_DATABASE_URL  base de datos de verify --record
    """
    settings.validate()


@cli.command()
@graph_option
@click.option("--dump-reps", is_flag=True, help="Incluye las matrices de cada indecomponible")
@handle_errors
def roots(graph, dump_reps):
    """Φ_{≥−1}, tipo y exponentes."""
    q = resolve_quiver(graph)
    dynkin = classify_tree(q.graph)
    data = {
        "quiver": q.to_contract(),
        "dynkin": dynkin.name,
        "exponents": {name: {"exponents": list(e), "coxeter_number": h} for name, (e, h) in exponent_table(dynkin).items()},
        "almost_positive_roots": [{"label": r.label(), "coords": list(r.coords)} for r in almost_positive_roots(q.graph)],
    }
    if dump_reps:
        data["representations"] = [rep_to_json(m) for m in all_indecomposables(q)]
    emit(data)


@cli.command()
@graph_option
@format_option
@large_option
@handle_errors
def compat(graph, fmt, large):
    """Matriz de grados de compatibilidad (α‖β)_Γ."""
    q = resolve_quiver(graph)
    require_rank_cap(q, large)
    roots = almost_positive_roots(q.graph)
    labels = [r.label() for r in roots]
    degrees = compatibility_matrix(q, roots)
    frame = pd.DataFrame(degrees, columns=labels)
    frame.insert(0, "root", labels)
    emit({"quiver": q.label(), "roots": labels, "degrees": degrees.tolist()}, fmt, frame)


@cli.command()
@graph_option
@format_option
@large_option
@handle_errors
def clusters(graph, fmt, large):
    """Γ-clusters en orden lexicográfico."""
    q = resolve_quiver(graph)
    found = enumerate_clusters(q, large)
    frame = pd.DataFrame([c.labels() for c in found], columns=[f"root_{k}" for k in range(q.rank)])
    emit({
        "quiver": q.label(),
        "count": len(found),
        "positive": sum(1 for c in found if c.is_positive()),
        "clusters": [c.labels() for c in found],
    }, fmt, frame)


@cli.command()
@graph_option
@format_option
@large_option
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Escribe el abanico en este archivo")
@click.option("--check", is_flag=True, help="Verifica pureza, lisura y completitud por muestreo")
@click.option("--samples", type=int, default=None)
@click.option("--seed", type=int, default=None)
@handle_errors
def fan(graph, fmt, large, out, check, samples, seed):
    """Abanico Δ_Γ: raíces y clusters por índices."""
    q = resolve_quiver(graph)
    if check:
        report = verify_fan(q, samples, seed, large)
        emit(report.to_json())
        sys.exit(EXIT_OK if report.passed else EXIT_CHECK_FAILED)
    data = build_fan(q, large)
    if out:
        if fmt == "csv":
            data.to_frame().to_csv(out, index=False)
        else:
            Path(out).write_text(json.dumps(data.to_json(), indent=2) + "\n", encoding="utf-8")
        logger.info(f"💾 Abanico escrito en {out}")
        return
    emit(data.to_json(), fmt, data.to_frame())


@cli.command()
@graph_option
@click.option("--gamma", required=True, help="Coordenadas separadas por comas, ej: 1,-2,0")
@handle_errors
def expand(graph, gamma):
    """Expansión en clusters de γ."""
    q = resolve_quiver(graph)
    emit(cluster_expansion(q, parse_gamma(q, gamma)).to_json())


@cli.command(name="sigma")
@graph_option
@click.option("--gamma", required=True, help="Coordenadas separadas por comas")
@click.option("--word", required=True, help="Letras en orden de aplicación: '1,2,+,-' (i = σ_i, ± = τ_±)")
@handle_errors
def sigma_command(graph, gamma, word):
    """Aplica una palabra en σ_i y τ_± a γ."""
    q = resolve_quiver(graph)
    current = parse_gamma(q, gamma)
    steps = []
    for token in (t for t in word.replace(" ", "").split(",") if t):
        if token.lstrip("Tt") in ("+", "-"):
            current = tau(q.graph, token.lstrip("Tt"), current)
        else:
            current = sigma(q.graph, int(token.lstrip("Ss")), current)
        steps.append({"letter": token, "value": list(current.coords)})
    emit({"input": list(parse_gamma(q, gamma).coords), "steps": steps, "result": list(current.coords)})


@cli.command()
@graph_option
@click.option("--max-len", type=int, default=None, help="Por defecto 2·n·(n+1) para lazos y 10 para lemas")
@click.option("--check", "check", type=click.Choice(["loops", "lemmas"]), default="loops", show_default=True)
@click.option("--word", default=None, help="Normaliza esta palabra desde el carcaj dado, ej: 'S1,S2,D'")
@handle_errors
def groupoid(graph, max_len, check, word):
    """Lazos en Γ₀ o lemas de palabras reducidas."""
    q = resolve_quiver(graph)
    if word is not None:
        w = Word.of(q, word)
        emit({"start": q.label(), "word": str(w), "end": apply_word(w).label(), "normal_form": str(normal_form(w))})
        return
    if check == "loops":
        report = classify_loops(q.graph, max_len)
    else:
        report = check_lemmas(q.graph, 10 if max_len is None else max_len)
    emit(report.to_json())
    sys.exit(EXIT_OK if report.passed else EXIT_CHECK_FAILED)


@cli.command()
@graph_option
@click.option("--all-orientations", is_flag=True, help="f⁺ en todas las orientaciones y la fórmula de producto")
@click.option("--moebius", is_flag=True, help="Comprueba la relación entre f y f⁺ para todo (k, J)")
@click.option("--jobs", type=int, default=1, show_default=True)
@format_option
@large_option
@handle_errors
def census(graph, all_orientations, moebius, jobs, fmt, large):
    """f-vectores de los complejos de conjuntos compatibles."""
    if all_orientations:
        dynkin = parse_dynkin_name(graph) if not Path(graph).is_file() else classify_tree(load_quiver(graph).graph)
        report = orientation_invariance(dynkin, jobs=jobs, large=large)
        emit(report.to_json(), fmt, report.to_frame())
        sys.exit(EXIT_OK if report.passed else EXIT_CHECK_FAILED)
    q = resolve_quiver(graph)
    if moebius:
        report = moebius_consistency(q, large)
        emit(report.to_json())
        sys.exit(EXIT_OK if report.passed else EXIT_CHECK_FAILED)
    emit({
        "quiver": q.label(),
        "f_plus": f_plus_vector(q, large).as_list(),
        "f": full_f_vector(q, q.vertices, large).as_list(),
    })


@cli.command()
@click.option("--graph", "graphs", multiple=True, help=f"Repetible; por defecto {', '.join(DEFAULT_GRAPHS)}")
@click.option("--checks", multiple=True, help="Grupo (rep-linear, decorated, clusters, groupoid, census) o comprobación")
@click.option("--seed", type=int, default=None)
@click.option("--samples", type=int, default=None)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--record", is_flag=True, help="Registra la corrida en la base de datos")
@click.option("--timings", is_flag=True, help="Incluye tiempos por comprobación")
@click.option("--exhaustive-rank", type=int, default=EXHAUSTIVE_RANK, show_default=True,
              help="Rango máximo con todas las orientaciones; por encima solo Γ₀")
@large_option
@handle_errors
def verify(graphs, checks, seed, samples, jobs, record, timings, exhaustive_rank, large):
    """Corre la batería de verificación."""
    cfg = VerificationConfig(
        graphs=tuple(graphs) or DEFAULT_GRAPHS,
        checks=tuple(c for group in checks for c in group.split(",") if c),
        seed=settings.SEED if seed is None else seed,
        samples=settings.DEFAULT_SAMPLES if samples is None else samples,
        jobs=jobs,
        large=large,
        exhaustive_rank=exhaustive_rank,
    )
    if record:
        report = _recorded_run(cfg)
    else:
        report = run_verify_suite(cfg)
    emit(report.to_json(timings))
    sys.exit(report.exit_code)


def _recorded_run(cfg: VerificationConfig):
    from persistence.db_connection import db
    from persistence.repositories.check_record_repository import CheckRecordRepository
    from persistence.repositories.verification_run_repository import VerificationRunRepository

    db.create_tables()
    with db.get_session() as session:
        runs = VerificationRunRepository(session)
        records = CheckRecordRepository(session)
        run = runs.start(cfg.seed, {"graphs": list(cfg.graphs), "checks": list(cfg.checks)})
        try:
            report = run_verify_suite(cfg, on_result=lambda result: records.add_result(run.id, result))
        except QuiverError as e:
            runs.end(run.id, "error", str(e)[:255])
            raise
        runs.end(run.id, "passed" if report.passed else "failed")
        logger.info(f"💾 Corrida #{run.id} registrada en {db.url}")
    return report


if __name__ == "__main__":
    cli()
