"""Operator command line: bootstrap seeding, accounts, and the daily backup.

A thin client over the service API — it holds no store of its own. Exit
codes are part of the contract (scripts branch on them):

    0  success
    3  API refused or unreachable
    4  local file I/O failed
    5  backup integrity failure (checksum / corrupt / unsupported version)
    6  seed file does not parse
    7  seed would violate a system invariant
"""

from __future__ import annotations

import hashlib
import json as jsonlib
import sys
from dataclasses import dataclass

import click
import httpx

from .backup import BackupArchive
from .seeding import SeedInvariantViolation, SeedParseError, parse_seed, plan_seed

EXIT_OK = 0
EXIT_API = 3
EXIT_IO = 4
EXIT_INTEGRITY = 5
EXIT_PARSE = 6
EXIT_INVARIANT = 7

_INTEGRITY_CODES = {"CHECKSUM_MISMATCH", "CORRUPT_PAYLOAD", "UNSUPPORTED_VERSION"}


class CliFailure(click.ClickException):
    """A failure with a contract exit code; message already user-ready."""

    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def build_http_client(api_base: str) -> httpx.Client:
    """Factory for the HTTP client; tests substitute an in-process one."""
    return httpx.Client(base_url=api_base, timeout=30.0)


@dataclass
class CliContext:
    client: httpx.Client
    admin_path: str
    username: str | None
    password: str | None
    token: str | None
    locale: str
    json_output: bool

    def _auth_headers(self) -> dict[str, str]:
        if self.token is None:
            if not self.username or not self.password:
                raise CliFailure(
                    "admin credentials required (--username/--password or RECORDROUTE_ADMIN_TOKEN)",
                    EXIT_API,
                )
            response = self.call(
                "POST",
                "/api/login",
                json={"username": self.username, "password": self.password},
                authed=False,
            )
            self.token = response.json()["token"]
        return {"Authorization": f"Bearer {self.token}"}

    def call(self, method: str, path: str, *, authed: bool = True, **kwargs) -> httpx.Response:
        headers = dict(kwargs.pop("headers", {}))
        if authed:
            headers.update(self._auth_headers())
        headers.setdefault("Accept-Language", self.locale)
        try:
            response = self.client.request(method, path, headers=headers, **kwargs)
        except httpx.HTTPError as exc:
            raise CliFailure(f"API unreachable: {exc}", EXIT_API)
        if response.status_code >= 400:
            code, message = _error_of(response)
            exit_code = EXIT_INTEGRITY if code in _INTEGRITY_CODES else EXIT_API
            raise CliFailure(f"API error {code}: {message}", exit_code)
        return response

    def admin(self, method: str, sub_path: str, **kwargs) -> httpx.Response:
        return self.call(method, f"{self.admin_path}{sub_path}", **kwargs)

    def emit(self, data: dict, human: str) -> None:
        if self.json_output:
            click.echo(jsonlib.dumps(data, ensure_ascii=False))
        else:
            click.echo(human)


def _error_of(response: httpx.Response) -> tuple[str, str]:
    try:
        body = response.json()
        return body.get("code", "HTTP_ERROR"), body.get("message", response.text)
    except ValueError:
        return "HTTP_ERROR", f"status {response.status_code}"


@click.group()
@click.option("--api", envvar="RECORDROUTE_API", default="http://127.0.0.1:8000", show_default=True)
@click.option("--admin-path", envvar="RECORDROUTE_ADMIN_PATH", default="/admin", show_default=True)
@click.option("--username", envvar="RECORDROUTE_ADMIN_USERNAME", default=None)
@click.option("--password", envvar="RECORDROUTE_ADMIN_PASSWORD", default=None)
@click.option("--token", envvar="RECORDROUTE_ADMIN_TOKEN", default=None)
@click.option("--locale", envvar="RECORDROUTE_LOCALE", default="en", show_default=True)
@click.option("--json", "json_output", is_flag=True, help="machine-readable output")
@click.pass_context
def main(ctx, api, admin_path, username, password, token, locale, json_output):
    """Administer a running records-routing service."""
    ctx.obj = CliContext(
        client=build_http_client(api),
        admin_path=admin_path.rstrip("/"),
        username=username,
        password=password,
        token=token,
        locale=locale,
        json_output=json_output,
    )


@main.command()
@click.option("--file", "seed_path", required=True, type=click.Path())
@click.pass_obj
def seed(cli: CliContext, seed_path):
    """Create departments and accounts from a seed file (idempotent)."""
    try:
        with open(seed_path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliFailure(f"cannot read seed file: {exc}", EXIT_IO)
    try:
        spec = parse_seed(text)
    except SeedParseError as exc:
        raise CliFailure(str(exc), EXIT_PARSE)

    existing_depts = cli.call("GET", "/api/departments").json()
    existing_users = {u["username"] for u in cli.admin("GET", "/users").json()}
    try:
        plan = plan_seed(spec, existing_depts, existing_users)
    except SeedInvariantViolation as exc:
        raise CliFailure(str(exc), EXIT_INVARIANT)

    for dept in plan.create_departments:
        cli.admin(
            "POST",
            "/departments",
            json={"code": dept.code, "name": dept.name, "kind": dept.kind.value},
        )
    dept_ids = {d["code"]: d["dept_id"] for d in cli.call("GET", "/api/departments").json()}
    for user in plan.create_users:
        cli.admin(
            "POST",
            "/users",
            json={
                "username": user.username,
                "password": user.password,
                "dept_id": dept_ids[user.department_code],
                "bound_ip": user.bound_ip,
                "role": user.role.value,
            },
        )
    summary = {
        "departments_created": len(plan.create_departments),
        "departments_existing": plan.existing_departments,
        "users_created": len(plan.create_users),
        "users_existing": plan.existing_users,
    }
    cli.emit(
        summary,
        "departments: {departments_created} created, {departments_existing} unchanged; "
        "users: {users_created} created, {users_existing} unchanged".format(**summary),
    )


@main.command()
@click.option("--mode", type=click.Choice(["none", "zipped"]), default="zipped", show_default=True)
@click.option("--out", "out_path", required=True, type=click.Path())
@click.pass_obj
def backup(cli: CliContext, mode, out_path):
    """Export a backup archive to a local file."""
    data = cli.admin("GET", f"/backup/export?mode={mode}").content
    try:
        with open(out_path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise CliFailure(f"cannot write archive: {exc}", EXIT_IO)
    archive = BackupArchive.from_bytes(data)
    uncompressed = len(archive.canonical_payload())
    ratio = len(archive.payload) / uncompressed if uncompressed else 1.0
    cli.emit(
        {
            "path": out_path,
            "mode": mode,
            "bytes": len(data),
            "payload_bytes": len(archive.payload),
            "uncompressed_bytes": uncompressed,
            "ratio": round(ratio, 4),
            "sha256": hashlib.sha256(data).hexdigest(),
        },
        f"wrote {out_path}: {len(data)} bytes ({mode}), "
        f"payload {len(archive.payload)}/{uncompressed} bytes = {ratio:.1%} of uncompressed",
    )


@main.command()
@click.option("--in", "in_path", required=True, type=click.Path())
@click.pass_obj
def restore(cli: CliContext, in_path):
    """Replace the service's store with an archive's snapshot."""
    try:
        with open(in_path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise CliFailure(f"cannot read archive: {exc}", EXIT_IO)
    report = cli.admin(
        "POST",
        "/backup/import",
        content=data,
        headers={"Content-Type": "application/octet-stream"},
    ).json()
    cli.emit(
        report,
        "restored {tables} tables, {rows} rows (checksum ok: {checksum_ok})".format(**report),
    )


@main.group()
def user():
    """Manage clerk and admin accounts."""


@user.command("add")
@click.option("--username", "new_username", required=True)
@click.option("--user-password", required=True)
@click.option("--dept-code", required=True, type=int)
@click.option("--ip", required=True)
@click.option("--role", type=click.Choice(["clerk", "admin"]), default="clerk", show_default=True)
@click.pass_obj
def user_add(cli: CliContext, new_username, user_password, dept_code, ip, role):
    """Create an account bound to one department and one machine."""
    departments = cli.call("GET", "/api/departments").json()
    dept = next((d for d in departments if d["code"] == dept_code), None)
    if dept is None:
        raise CliFailure(f"no department with code {dept_code}", EXIT_API)
    created = cli.admin(
        "POST",
        "/users",
        json={
            "username": new_username,
            "password": user_password,
            "dept_id": dept["dept_id"],
            "bound_ip": ip,
            "role": role,
        },
    ).json()
    cli.emit(
        {"user_id": created["user_id"], "username": created["username"], "bound_ip": ip},
        f"created {role} account {new_username} at department {dept_code}, bound to {ip}",
    )


@user.command("rebind-ip")
@click.option("--username", "target_username", required=True)
@click.option("--ip", required=True)
@click.pass_obj
def user_rebind_ip(cli: CliContext, target_username, ip):
    """Move an account to a new machine; kills its live sessions."""
    accounts = cli.admin("GET", "/users").json()
    account = next((u for u in accounts if u["username"] == target_username), None)
    if account is None:
        raise CliFailure(f"no account named {target_username}", EXIT_API)
    updated = cli.admin(
        "POST", f"/users/{account['user_id']}/rebind-ip", json={"bound_ip": ip}
    ).json()
    cli.emit(
        {"user_id": updated["user_id"], "username": updated["username"], "bound_ip": updated["bound_ip"]},
        f"rebound {target_username} to {updated['bound_ip']}",
    )


if __name__ == "__main__":
    sys.exit(main())
