"""FastAPI wrapper around the verification library."""

from __future__ import annotations

from fastapi import FastAPI

from .. import __version__


def create_app() -> FastAPI:
    from .routes import router

    app = FastAPI(
        title="joneslab",
        version=__version__,
        description="Exact and numerical verification of cluster-algebra, "
        "projection-tower, and index-spectrum identities.",
    )
    app.include_router(router)
    return app


app = create_app()
