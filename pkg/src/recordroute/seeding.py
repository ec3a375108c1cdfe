"""Seed-file parsing and planning for first-time provisioning.

The seed file is YAML (schema in docs/seed-format.md): a list of
departments and a list of user accounts. Planning is pure — it compares
the seed against what already exists and says what to create — so the
CLI stays a thin executor and re-running a seed is a no-op.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import yaml

from .model import DepartmentKind, Role

SINGLETON_KINDS = (
    DepartmentKind.INCOMING_ARCHIVE,
    DepartmentKind.OUTGOING,
    DepartmentKind.ADMIN,
)


class SeedParseError(Exception):
    """The seed file does not parse or is structurally wrong."""


class SeedInvariantViolation(Exception):
    """The seeded system would break a cardinality or matching rule."""


@dataclass(frozen=True)
class SeedDepartment:
    code: int
    name: str
    kind: DepartmentKind


@dataclass(frozen=True)
class SeedUser:
    username: str
    password: str
    department_code: int
    bound_ip: str
    role: Role = Role.CLERK


@dataclass(frozen=True)
class SeedSpec:
    departments: tuple[SeedDepartment, ...]
    users: tuple[SeedUser, ...]


@dataclass
class SeedPlan:
    create_departments: list[SeedDepartment] = field(default_factory=list)
    existing_departments: int = 0
    create_users: list[SeedUser] = field(default_factory=list)
    existing_users: int = 0


def parse_seed(text: str) -> SeedSpec:
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise SeedParseError(f"seed file is not valid YAML: {exc}")
    if not isinstance(raw, dict):
        raise SeedParseError("seed file must be a mapping with 'departments' and 'users'")

    departments = []
    for i, entry in enumerate(raw.get("departments") or []):
        if not isinstance(entry, dict):
            raise SeedParseError(f"departments[{i}] is not a mapping")
        try:
            departments.append(
                SeedDepartment(
                    code=int(entry["code"]),
                    name=str(entry["name"]),
                    kind=DepartmentKind(entry["kind"]),
                )
            )
        except KeyError as exc:
            raise SeedParseError(f"departments[{i}] is missing {exc}")
        except ValueError as exc:
            raise SeedParseError(f"departments[{i}]: {exc}")

    users = []
    for i, entry in enumerate(raw.get("users") or []):
        if not isinstance(entry, dict):
            raise SeedParseError(f"users[{i}] is not a mapping")
        try:
            users.append(
                SeedUser(
                    username=str(entry["username"]),
                    password=str(entry["password"]),
                    department_code=int(entry["department_code"]),
                    bound_ip=str(entry["bound_ip"]),
                    role=Role(entry.get("role", "clerk")),
                )
            )
        except KeyError as exc:
            raise SeedParseError(f"users[{i}] is missing {exc}")
        except ValueError as exc:
            raise SeedParseError(f"users[{i}]: {exc}")

    codes = [d.code for d in departments]
    if len(codes) != len(set(codes)):
        raise SeedParseError("duplicate department codes in seed file")
    names = [u.username for u in users]
    if len(names) != len(set(names)):
        raise SeedParseError("duplicate usernames in seed file")
    return SeedSpec(departments=tuple(departments), users=tuple(users))


def plan_seed(
    spec: SeedSpec,
    existing_departments: list[dict],
    existing_usernames: set[str],
) -> SeedPlan:
    """Decide what to create; reject mismatches and bad cardinality.

    `existing_departments` are API rows ({code, name, kind, ...}).
    """
    by_code = {d["code"]: d for d in existing_departments}
    plan = SeedPlan()
    for dept in spec.departments:
        current = by_code.get(dept.code)
        if current is None:
            plan.create_departments.append(dept)
        elif current["name"] != dept.name or current["kind"] != dept.kind.value:
            raise SeedInvariantViolation(
                f"department code {dept.code} already exists with different name or kind"
            )
        else:
            plan.existing_departments += 1

    final_kinds: list[str] = [d["kind"] for d in existing_departments]
    final_kinds += [d.kind.value for d in plan.create_departments]
    for kind in SINGLETON_KINDS:
        count = final_kinds.count(kind.value)
        if count != 1:
            raise SeedInvariantViolation(
                f"system must have exactly one {kind.value} department, would have {count}"
            )

    final_codes = set(by_code) | {d.code for d in plan.create_departments}
    for user in spec.users:
        if user.department_code not in final_codes:
            raise SeedInvariantViolation(
                f"user {user.username} references unknown department code {user.department_code}"
            )
        if user.username in existing_usernames:
            plan.existing_users += 1
        else:
            plan.create_users.append(user)
    return plan
