"""Shared fixtures: a small seeded foundation and API clients per user.

scrypt cost is turned down for test speed (the parameters are a config
knob); nothing else is weakened.
"""

from __future__ import annotations

from dataclasses import dataclass

import pytest
from fastapi.testclient import TestClient

from recordroute import auth
from recordroute.api import create_app
from recordroute.config import BootstrapConfig, SecurityConfig, ServiceConfig
from recordroute.model import Department, DepartmentKind, Role, UserContext, new_id
from recordroute.store import Store

FAST_SECURITY = SecurityConfig(scrypt_log_n=4, scrypt_r=8, scrypt_p=1)

ADMIN_IP = "10.0.0.1"
CLERK_IPS = {
    "inbox1": "10.0.1.10",
    "outbox1": "10.0.2.10",
    "clerk31": "10.0.3.10",
    "clerk32": "10.0.4.10",
}
PASSWORDS = {
    "admin": "admin-pw",
    "inbox1": "inbox-pw",
    "outbox1": "outbox-pw",
    "clerk31": "clerk31-pw",
    "clerk32": "clerk32-pw",
}

DEPT_SPECS = (
    (10, "Incoming Archive", DepartmentKind.INCOMING_ARCHIVE),
    (20, "Outgoing", DepartmentKind.OUTGOING),
    (31, "Engineering College Affairs", DepartmentKind.FUNCTIONAL),
    (32, "Finance Directorate", DepartmentKind.FUNCTIONAL),
)

USER_DEPTS = {"inbox1": 10, "outbox1": 20, "clerk31": 31, "clerk32": 32}


@dataclass
class Foundation:
    store: Store
    departments: dict[int, Department]
    users: dict[str, UserContext]

    def dept_id(self, code: int) -> str:
        return self.departments[code].dept_id


def build_foundation(store: Store | None = None) -> Foundation:
    store = store or Store.memory()
    auth.bootstrap(
        store,
        BootstrapConfig(admin_password=PASSWORDS["admin"], admin_bound_ip=ADMIN_IP),
        FAST_SECURITY,
    )
    departments = {1: store.get_department_by_kind(DepartmentKind.ADMIN)}
    with store.transaction():
        for code, name, kind in DEPT_SPECS:
            dept = Department(dept_id=new_id(), code=code, name=name, kind=kind)
            store.insert_department(dept)
            departments[code] = dept

    admin_user = store.get_user_by_username("admin")
    users = {
        "admin": UserContext(
            admin_user.user_id, "admin", admin_user.dept_id, Role.ADMIN
        )
    }
    for username, dept_code in USER_DEPTS.items():
        record = auth.create_user(
            store,
            users["admin"],
            username=username,
            password=PASSWORDS[username],
            dept_id=departments[dept_code].dept_id,
            bound_ip=CLERK_IPS[username],
            role=Role.CLERK,
            security=FAST_SECURITY,
        )
        users[username] = UserContext(record.user_id, username, record.dept_id, Role.CLERK)
    return Foundation(store=store, departments=departments, users=users)


@pytest.fixture
def foundation() -> Foundation:
    return build_foundation()


ADMIN_PATH = "/ops-admin"


@dataclass
class Api:
    app: object
    store: Store
    foundation: Foundation
    admin_path: str = ADMIN_PATH

    def client_for(self, username: str) -> TestClient:
        """A client whose source IP is the user's bound IP, pre-logged-in."""
        ip = ADMIN_IP if username == "admin" else CLERK_IPS[username]
        client = TestClient(self.app, client=(ip, 40000))
        response = client.post(
            "/api/login", json={"username": username, "password": PASSWORDS[username]}
        )
        assert response.status_code == 200, response.text
        client.headers["Authorization"] = f"Bearer {response.json()['token']}"
        return client

    def anonymous(self, ip: str = "172.16.0.9") -> TestClient:
        return TestClient(self.app, client=(ip, 40000))


def build_api(foundation: Foundation | None = None) -> Api:
    foundation = foundation or build_foundation()
    config = ServiceConfig(admin_path=ADMIN_PATH, security=FAST_SECURITY)
    app = create_app(foundation.store, config)
    return Api(app=app, store=foundation.store, foundation=foundation)


@pytest.fixture
def api() -> Api:
    return build_api()
