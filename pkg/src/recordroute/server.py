"""Service entry point: build the store and app from a config file and serve.

Config is YAML (all keys optional; see docs/server-config.md). Without a
data_dir the store is in-memory — useful for trying the system out, not
for production.
"""

from __future__ import annotations

import logging

import click
import uvicorn
import yaml

from .api import create_app
from .config import BootstrapConfig, LimitsConfig, SecurityConfig, ServiceConfig
from .store import Store

logger = logging.getLogger(__name__)


def service_config_from(raw: dict) -> ServiceConfig:
    security = SecurityConfig(
        scrypt_log_n=raw.get("scrypt_log_n", SecurityConfig.scrypt_log_n),
        scrypt_r=raw.get("scrypt_r", SecurityConfig.scrypt_r),
        scrypt_p=raw.get("scrypt_p", SecurityConfig.scrypt_p),
        session_ttl_seconds=raw.get("session_ttl_seconds", SecurityConfig.session_ttl_seconds),
    )
    limits = LimitsConfig(
        page_size_default=raw.get("page_size_default", LimitsConfig.page_size_default),
        page_size_max=raw.get("page_size_max", LimitsConfig.page_size_max),
        attachment_max_bytes=raw.get("attachment_max_bytes", LimitsConfig.attachment_max_bytes),
    )
    bootstrap = None
    if "bootstrap" in raw:
        b = raw["bootstrap"] or {}
        bootstrap = BootstrapConfig(
            admin_dept_code=b.get("admin_dept_code", BootstrapConfig.admin_dept_code),
            admin_dept_name=b.get("admin_dept_name", BootstrapConfig.admin_dept_name),
            admin_username=b.get("admin_username", BootstrapConfig.admin_username),
            admin_password=b.get("admin_password", BootstrapConfig.admin_password),
            admin_bound_ip=b.get("admin_bound_ip", BootstrapConfig.admin_bound_ip),
        )
    return ServiceConfig(
        admin_path=raw.get("admin_path", ServiceConfig.admin_path),
        default_locale=raw.get("default_locale", ServiceConfig.default_locale),
        cookie_secure=raw.get("cookie_secure", ServiceConfig.cookie_secure),
        cors_origins=tuple(raw.get("cors_origins", ())),
        security=security,
        limits=limits,
        bootstrap=bootstrap,
    )


@click.command()
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--host", default=None, help="overrides the config file")
@click.option("--port", type=int, default=None, help="overrides the config file")
def main(config_path, host, port):
    """Run the records-routing service."""
    raw = {}
    if config_path:
        with open(config_path, "r", encoding="utf-8") as fh:
            raw = yaml.safe_load(fh) or {}
    config = service_config_from(raw)
    data_dir = raw.get("data_dir")
    if data_dir:
        store = Store.open(data_dir, config.limits)
    else:
        logger.warning("no data_dir configured; running with an in-memory store")
        store = Store.memory(config.limits)
    app = create_app(store, config)
    uvicorn.run(
        app,
        host=host or raw.get("host", "127.0.0.1"),
        port=port or raw.get("port", 8000),
        log_level="info",
    )


if __name__ == "__main__":
    main()
