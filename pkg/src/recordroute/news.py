"""Foundation-wide announcement board.

News is the one deletable thing in the system; applications never are.
Only administrators post or remove items, every authenticated user reads.
"""

from __future__ import annotations

from .errors import NotAuthorized, NotFound, ValidationFailed
from .model import NewsItem, UserContext
from .store import Page, Store


def add_news(store: Store, actor: UserContext, title: str, body: str) -> NewsItem:
    if not actor.is_admin:
        raise NotAuthorized("only administrators post news")
    if not title:
        raise ValidationFailed("title", "title must not be empty")
    with store.transaction():
        return store.insert_news(title, body, actor.user_id)


def list_news(store: Store, page: int = 0, page_size: int | None = None) -> Page[NewsItem]:
    return store.list_news(page, page_size or store.limits.page_size_default)


def delete_news(store: Store, actor: UserContext, news_id: str) -> None:
    if not actor.is_admin:
        raise NotAuthorized("only administrators delete news")
    with store.transaction():
        if store.get_news(news_id) is None:
            raise NotFound(f"no news item {news_id}")
        store.delete_news(news_id)
