"""Message catalogs for the service and its clients.

Kurdish is the working language of the deployment; English is kept at
full parity so nothing ever silently falls back. Error codes map to
`error.<CODE>` keys; interface labels live under `ui.`. Both catalogs
must define exactly the same key set (enforced by tests), so a missing
key is a build defect, not a runtime condition.
"""

from __future__ import annotations

from .errors import MissingKey

SUPPORTED_LOCALES = ("ku", "en")

_EN = {
    "error.INTERNAL_ERROR": "Unexpected server error.",
    "error.NOT_FOUND": "Record not found.",
    "error.NOT_AUTHORIZED": "You are not allowed to perform this action.",
    "error.BAD_CREDENTIALS": "Wrong username or password.",
    "error.ACCESS_DENIED_IP": "Access denied: this account may only be used from its own computer.",
    "error.INVALID_SESSION": "Session is invalid or has expired; please log in again.",
    "error.WRONG_DEPARTMENT": "Your account does not cover this section.",
    "error.VALIDATION_FAILED": "A field value is not acceptable.",
    "error.IMMUTABLE_FIELD": "This field can never be changed.",
    "error.DUPLICATE_INCOMING_NUMBER": "An application with this incoming number is already registered for that year.",
    "error.DUPLICATE_USERNAME": "This username is already taken.",
    "error.UNKNOWN_DEPARTMENT": "No such department.",
    "error.ALREADY_PUBLISHED": "The application is already published and can no longer change.",
    "error.SELF_REDIRECT": "The application is already at that department.",
    "error.NOT_AT_OUTGOING": "The application has not reached the outgoing department.",
    "error.NO_ATTACHMENT": "This application has no attached file.",
    "error.DISALLOWED_TYPE": "This file type is not accepted.",
    "error.TOO_LARGE": "The file is too large.",
    "error.INVALID_QUERY": "The search request is not valid.",
    "error.CHECKSUM_MISMATCH": "The backup file failed its integrity check.",
    "error.UNSUPPORTED_VERSION": "The backup file version is not supported.",
    "error.CORRUPT_PAYLOAD": "The backup file is damaged.",
    "error.STORAGE_FAILURE": "The storage layer failed; try again or contact the administrator.",
    "error.CONFLICT_RETRYABLE": "Another clerk changed this record at the same time; try again.",
    "error.MISSING_KEY": "A display text is missing for this language.",
    "ui.app_title": "Foundation e-Management",
    "ui.index.welcome": "Welcome to the foundation's records service. Choose your section to begin.",
    "ui.login.title": "Login",
    "ui.login.username": "Username",
    "ui.login.password": "Password",
    "ui.login.submit": "Log in",
    "ui.logout": "Log out",
    "ui.nav.search": "Search",
    "ui.nav.directed": "Directed jobs",
    "ui.nav.insert": "New application",
    "ui.nav.publish_list": "Publish list",
    "ui.nav.news": "News",
    "ui.home.title": "Department home",
    "ui.form.year": "Year",
    "ui.form.month": "Month",
    "ui.form.day": "Day",
    "ui.form.incoming_number": "Incoming number (book ID)",
    "ui.form.type_code": "Application type (department code)",
    "ui.form.external_publish_no": "External publish no.",
    "ui.form.external_publish_date": "External publish date",
    "ui.form.office_of_origin": "Office the application came from",
    "ui.form.subject": "Subject",
    "ui.form.person_name": "Person name",
    "ui.form.notes": "Notes",
    "ui.form.directed_to": "Directed to (section)",
    "ui.form.attachment": "Book soft copy (file)",
    "ui.form.submit": "OK",
    "ui.form.subject_required": "Subject must not be empty.",
    "ui.form.number_numeric": "Incoming number must be a positive number.",
    "ui.columns.year": "Year",
    "ui.columns.department_code": "Department code",
    "ui.columns.subject": "Subject",
    "ui.columns.person_name": "Person name",
    "ui.columns.date_of_signature": "Date of signature",
    "ui.columns.publish_date": "Publish date",
    "ui.columns.publish_no": "Publish no.",
    "ui.columns.office_goto": "Sent to office",
    "ui.columns.incoming_number": "Incoming no.",
    "ui.columns.status": "Status",
    "ui.columns.location": "Location",
    "ui.columns.incoming_date": "Incoming date",
    "ui.pagination.first": "First",
    "ui.pagination.previous": "Previous",
    "ui.pagination.next": "Next",
    "ui.pagination.last": "Last",
    "ui.filter.show_all": "Show all records",
    "ui.filter.show_filter": "Show filter",
    "ui.filter.apply": "Apply filter",
    "ui.denied.title": "Access denied",
    "ui.denied.body": "You cannot enter this section from this computer.",
    "ui.denied.back": "Back to login",
    "ui.track.title": "Application trail",
    "ui.track.registered": "Registered",
    "ui.track.redirected": "Directed",
    "ui.track.updated": "Updated",
    "ui.track.published": "Published",
    "ui.detail.title": "Application",
    "ui.detail.status": "Status",
    "ui.detail.location": "Current location",
    "ui.detail.redirect": "Direct to",
    "ui.detail.update": "Save changes",
    "ui.detail.publish": "Publish",
    "ui.detail.attachment_download": "Download attachment",
    "ui.news.title_label": "Title",
    "ui.news.body_label": "Body",
    "ui.news.add": "Add news",
    "ui.news.delete": "Delete",
    "ui.empty": "No records.",
    "ui.status.registered": "Registered",
    "ui.status.directed": "Directed",
    "ui.status.published": "Published",
    "ui.locale.toggle": "کوردی",
}

_KU = {
    "error.INTERNAL_ERROR": "هەڵەیەکی چاوەڕواننەکراوی ڕاژەکار.",
    "error.NOT_FOUND": "تۆمارەکە نەدۆزرایەوە.",
    "error.NOT_AUTHORIZED": "ڕێگەت پێنەدراوە ئەم کردارە ئەنجام بدەیت.",
    "error.BAD_CREDENTIALS": "ناوی بەکارهێنەر یان وشەی نهێنی هەڵەیە.",
    "error.ACCESS_DENIED_IP": "ڕێگەپێدان ڕەتکرایەوە: ئەم هەژمارە تەنها لە کۆمپیوتەرەکەی خۆیەوە بەکاردێت.",
    "error.INVALID_SESSION": "دانیشتنەکە نادروستە یان بەسەرچووە؛ تکایە دووبارە بچۆرەوە ژوورەوە.",
    "error.WRONG_DEPARTMENT": "هەژمارەکەت ئەم بەشە ناگرێتەوە.",
    "error.VALIDATION_FAILED": "نرخی خانەیەک قبوڵ ناکرێت.",
    "error.IMMUTABLE_FIELD": "ئەم خانەیە هەرگیز ناگۆڕدرێت.",
    "error.DUPLICATE_INCOMING_NUMBER": "داواکارییەک بەم ژمارە هاتووە بۆ ئەو ساڵە پێشتر تۆمارکراوە.",
    "error.DUPLICATE_USERNAME": "ئەم ناوی بەکارهێنەرە پێشتر گیراوە.",
    "error.UNKNOWN_DEPARTMENT": "بەشی وا نییە.",
    "error.ALREADY_PUBLISHED": "داواکارییەکە پێشتر بڵاوکراوەتەوە و ئیتر ناگۆڕدرێت.",
    "error.SELF_REDIRECT": "داواکارییەکە پێشتر لەو بەشەدایە.",
    "error.NOT_AT_OUTGOING": "داواکارییەکە نەگەیشتووەتە بەشی دەرچوون.",
    "error.NO_ATTACHMENT": "ئەم داواکارییە هیچ فایلێکی هاوپێچی نییە.",
    "error.DISALLOWED_TYPE": "ئەم جۆرە فایلە قبوڵ ناکرێت.",
    "error.TOO_LARGE": "فایلەکە زۆر گەورەیە.",
    "error.INVALID_QUERY": "داواکاری گەڕانەکە دروست نییە.",
    "error.CHECKSUM_MISMATCH": "فایلی پاشەکەوتەکە لە پشکنینی دروستی سەرنەکەوت.",
    "error.UNSUPPORTED_VERSION": "وەشانی فایلی پاشەکەوتەکە پشتگیری ناکرێت.",
    "error.CORRUPT_PAYLOAD": "فایلی پاشەکەوتەکە تێکچووە.",
    "error.STORAGE_FAILURE": "توێژی هەڵگرتن شکستی هێنا؛ دووبارە هەوڵبدەوە یان پەیوەندی بە بەڕێوەبەر بکە.",
    "error.CONFLICT_RETRYABLE": "فەرمانبەرێکی دیکە هاوکات ئەم تۆمارەی گۆڕی؛ دووبارە هەوڵبدەوە.",
    "error.MISSING_KEY": "دەقی پیشاندان بۆ ئەم زمانە نەدۆزرایەوە.",
    "ui.app_title": "بەڕێوەبردنی ئەلیکترۆنی دامەزراوە",
    "ui.index.welcome": "بەخێربێیت بۆ خزمەتگوزاری تۆمارەکانی دامەزراوە. بەشەکەت هەڵبژێرە بۆ دەستپێکردن.",
    "ui.login.title": "چوونەژوورەوە",
    "ui.login.username": "ناوی بەکارهێنەر",
    "ui.login.password": "وشەی نهێنی",
    "ui.login.submit": "بچۆ ژوورەوە",
    "ui.logout": "چوونەدەرەوە",
    "ui.nav.search": "گەڕان",
    "ui.nav.directed": "کارە ئاراستەکراوەکان",
    "ui.nav.insert": "داواکاری نوێ",
    "ui.nav.publish_list": "لیستی بڵاوکراوەکان",
    "ui.nav.news": "هەواڵەکان",
    "ui.home.title": "ماڵپەڕی بەش",
    "ui.form.year": "ساڵ",
    "ui.form.month": "مانگ",
    "ui.form.day": "ڕۆژ",
    "ui.form.incoming_number": "ژمارەی هاتوو (ژمارەی کتێب)",
    "ui.form.type_code": "جۆری داواکاری (کۆدی بەش)",
    "ui.form.external_publish_no": "ژمارەی بڵاوکردنەوەی دەرەکی",
    "ui.form.external_publish_date": "بەرواری بڵاوکردنەوەی دەرەکی",
    "ui.form.office_of_origin": "ئەو فەرمانگەیەی داواکارییەکەی لێوە هاتووە",
    "ui.form.subject": "بابەت",
    "ui.form.person_name": "ناوی کەس",
    "ui.form.notes": "تێبینییەکان",
    "ui.form.directed_to": "ئاراستەکراو بۆ (بەش)",
    "ui.form.attachment": "وێنەی کتێبەکە (فایل)",
    "ui.form.submit": "باشە",
    "ui.form.subject_required": "بابەت نابێت بەتاڵ بێت.",
    "ui.form.number_numeric": "ژمارەی هاتوو دەبێت ژمارەیەکی ئەرێنی بێت.",
    "ui.columns.year": "ساڵ",
    "ui.columns.department_code": "کۆدی بەش",
    "ui.columns.subject": "بابەت",
    "ui.columns.person_name": "ناوی کەس",
    "ui.columns.date_of_signature": "بەرواری واژۆ",
    "ui.columns.publish_date": "بەرواری بڵاوکردنەوە",
    "ui.columns.publish_no": "ژمارەی بڵاوکردنەوە",
    "ui.columns.office_goto": "نێردراو بۆ فەرمانگە",
    "ui.columns.incoming_number": "ژمارەی هاتوو",
    "ui.columns.status": "دۆخ",
    "ui.columns.location": "شوێن",
    "ui.columns.incoming_date": "بەرواری هاتن",
    "ui.pagination.first": "یەکەم",
    "ui.pagination.previous": "پێشوو",
    "ui.pagination.next": "دواتر",
    "ui.pagination.last": "کۆتایی",
    "ui.filter.show_all": "هەموو تۆمارەکان پیشان بدە",
    "ui.filter.show_filter": "فلتەر پیشان بدە",
    "ui.filter.apply": "فلتەر جێبەجێ بکە",
    "ui.denied.title": "ڕێگەپێدان ڕەتکرایەوە",
    "ui.denied.body": "ناتوانیت لەم کۆمپیوتەرەوە بچیتە ناو ئەم بەشە.",
    "ui.denied.back": "گەڕانەوە بۆ چوونەژوورەوە",
    "ui.track.title": "شوێنپێی داواکاری",
    "ui.track.registered": "تۆمارکرا",
    "ui.track.redirected": "ئاراستەکرا",
    "ui.track.updated": "نوێکرایەوە",
    "ui.track.published": "بڵاوکرایەوە",
    "ui.detail.title": "داواکاری",
    "ui.detail.status": "دۆخ",
    "ui.detail.location": "شوێنی ئێستا",
    "ui.detail.redirect": "ئاراستە بکە بۆ",
    "ui.detail.update": "گۆڕانکارییەکان پاشەکەوت بکە",
    "ui.detail.publish": "بڵاوبکەوە",
    "ui.detail.attachment_download": "فایلی هاوپێچ دابگرە",
    "ui.news.title_label": "ناونیشان",
    "ui.news.body_label": "ناوەڕۆک",
    "ui.news.add": "هەواڵ زیاد بکە",
    "ui.news.delete": "بیسڕەوە",
    "ui.empty": "هیچ تۆمارێک نییە.",
    "ui.status.registered": "تۆمارکراو",
    "ui.status.directed": "ئاراستەکراو",
    "ui.status.published": "بڵاوکراوە",
    "ui.locale.toggle": "English",
}

CATALOGS: dict[str, dict[str, str]] = {"en": _EN, "ku": _KU}


def localize(key: str, locale: str) -> str:
    catalog = CATALOGS.get(locale)
    if catalog is None:
        raise MissingKey(f"unsupported locale: {locale}")
    text = catalog.get(key)
    if text is None:
        raise MissingKey(f"no {locale} text for {key}")
    return text


def error_message(code: str, locale: str) -> str:
    """Localized text for an error code; never raises on unknown codes."""
    key = f"error.{code}"
    for loc in (locale, "en"):
        text = CATALOGS.get(loc, {}).get(key)
        if text is not None:
            return text
    return CATALOGS["en"]["error.INTERNAL_ERROR"]
