"""Thin command-line client for the verification service.

By default every subcommand spins up the service in-process and talks to it
over the test transport; ``--server URL`` targets a running instance
instead.  Exit codes: 0 all checks passed, 1 a verification failed, 2 bad
arguments or an unreachable server.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .walkthrough import DEFAULT_RNG_SEED, EXPECT_FAIL_MODES

SCALAR_HELP = "int, fraction p/q, float, complex a+bj, or unit:n for e^(2*pi*i/n)"


class Client:
    """Lazy HTTP client: in-process app by default, remote with --server."""

    def __init__(self, server: str | None):
        self.server = server
        self._client = None

    def _connect(self):
        if self._client is None:
            if self.server:
                import httpx

                self._client = httpx.Client(base_url=self.server, timeout=120.0)
            else:
                import warnings

                with warnings.catch_warnings():
                    # the compat shim warns with a UserWarning subclass
                    warnings.simplefilter("ignore")
                    from fastapi.testclient import TestClient

                from .service import create_app

                self._client = TestClient(create_app())
        return self._client

    def post(self, path: str, payload: dict):
        try:
            return self._connect().post(path, json=payload)
        except Exception as exc:  # noqa: BLE001 - connection problems exit 2
            click.echo(f"cannot reach service: {exc}", err=True)
            sys.exit(2)

    def get(self, path: str):
        try:
            return self._connect().get(path)
        except Exception as exc:  # noqa: BLE001
            click.echo(f"cannot reach service: {exc}", err=True)
            sys.exit(2)


def _finish(response, fmt: str, output: str | None = None):
    if response.status_code == 422:
        body = response.json()
        raise click.UsageError(json.dumps(body.get("detail", body)))
    if response.status_code != 200:
        click.echo(f"service error {response.status_code}: {response.text}", err=True)
        sys.exit(2)
    data = response.json()
    if fmt == "json":
        text = json.dumps(data["report"], indent=2)
    elif fmt == "csv":
        text = data["csv"]
    else:
        text = data["table"]
    if output:
        Path(output).write_text(text if text.endswith("\n") else text + "\n")
    else:
        click.echo(text)
    sys.exit(0 if data["pass"] else 1)


format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "json"]),
    default="table",
    show_default=True,
    help="Output rendering.",
)


@click.group()
@click.option(
    "--server",
    metavar="URL",
    default=None,
    help="Base URL of a running service; omit to compute in-process.",
)
@click.version_option(package_name="joneslab")
@click.pass_context
def main(ctx: click.Context, server: str | None):
    """Verify cluster-algebra, projection-tower, and index-spectrum identities."""
    ctx.obj = Client(server)


@main.command()
@click.option(
    "--n-max",
    type=click.IntRange(min=3),
    default=24,
    show_default=True,
    help="Largest discrete order n.",
)
@click.option(
    "--sample",
    "samples",
    type=float,
    multiple=True,
    default=(1.5, 2.0, 10.0),
    show_default=True,
    help="Continuous-branch parameters t > 1 (repeatable).",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "json", "csv"]),
    default="table",
    show_default=True,
)
@click.option(
    "--output",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Write to a file instead of stdout.",
)
@click.pass_obj
def spectrum(client: Client, n_max: int, samples, fmt: str, output: str | None):
    """Admissible index values 4cos^2(pi/n) plus the continuous branch."""
    response = client.post(
        "/spectrum", {"n_max": n_max, "samples": list(samples)}
    )
    _finish(response, fmt, output)


@main.group()
def verify():
    """Run one verification family; exit 0 iff every check passes."""


@verify.command()
@click.option("--t", default="1", show_default=True, help=SCALAR_HELP)
@click.option("--m", type=click.IntRange(1, 7), default=3, show_default=True)
@click.option("--tol", type=float, default=1e-10, show_default=True)
@format_option
@click.pass_obj
def tl(client: Client, t: str, m: int, tol: float, fmt: str):
    """Projection-tower relations: idempotency, commutation, contraction."""
    _finish(client.post("/verify/tl", {"t": t, "m": m, "tol": tol}), fmt)


@verify.command()
@click.option("--depth", type=click.IntRange(1, 64), default=12, show_default=True)
@format_option
@click.pass_obj
def laurent(client: Client, depth: int, fmt: str):
    """Mutation path stays Laurent with positive coefficients."""
    _finish(client.post("/verify/laurent", {"depth": depth}), fmt)


@verify.command()
@click.option("--n-max", type=click.IntRange(1, 64), default=20, show_default=True)
@click.option(
    "--compose-max", type=click.IntRange(0, 12), default=6, show_default=True
)
@format_option
@click.pass_obj
def chebyshev(client: Client, n_max: int, compose_max: int, fmt: str):
    """Half-sum identity and the composition law, both exact."""
    _finish(
        client.post(
            "/verify/chebyshev", {"n_max": n_max, "compose_max": compose_max}
        ),
        fmt,
    )


@verify.command()
@click.option("--tol", type=float, default=1e-10, show_default=True)
@click.option("--n-max", type=click.IntRange(3, 64), default=24, show_default=True)
@format_option
@click.pass_obj
def casimir(client: Client, tol: float, n_max: int, fmt: str):
    """Casimir identity, symbolic and at resolved moduli."""
    _finish(client.post("/verify/casimir", {"tol": tol, "n_max": n_max}), fmt)


@verify.command()
@click.option("--levels", type=click.IntRange(1, 64), default=20, show_default=True)
@click.option("--powers-m", type=click.IntRange(1, 7), default=4, show_default=True)
@click.option("--seed-rng", type=int, default=DEFAULT_RNG_SEED, show_default=True)
@format_option
@click.pass_obj
def bratteli(client: Client, levels: int, powers_m: int, seed_rng: int, fmt: str):
    """Diagram combinatorics, dimension counts, conjugation axioms."""
    _finish(
        client.post(
            "/verify/bratteli",
            {"levels": levels, "powers_m": powers_m, "rng_seed": seed_rng},
        ),
        fmt,
    )


@verify.command()
@click.option("--t", default="1", show_default=True, help=SCALAR_HELP)
@format_option
@click.pass_obj
def audit(client: Client, t: str, fmt: str):
    """Show the printed 4x4 operator failing idempotency; exits 0 when it does."""
    _finish(client.post("/verify/audit", {"t": t}), fmt)


@main.command()
@format_option
@click.option("--seed-rng", type=int, default=DEFAULT_RNG_SEED, show_default=True)
@click.option(
    "--expect-fail",
    type=click.Choice(EXPECT_FAIL_MODES),
    default=None,
    help="Inject the named failing stage to demonstrate fault reporting.",
)
@click.pass_obj
def walkthrough(client: Client, fmt: str, seed_rng: int, expect_fail: str | None):
    """Run every verification stage in proof order."""
    _finish(
        client.post(
            "/walkthrough", {"rng_seed": seed_rng, "expect_fail": expect_fail}
        ),
        fmt,
    )


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
