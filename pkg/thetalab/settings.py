"""
Django settings for thetalab project.

Проект-лаборатория для графов без больших тета-подграфов: поиск тета-графов
с сертификатами, разложения по 2-/3-/4-суммам, классы графов и задача
о трёх рёбрах в одном разрезе. Веб-интерфейса нет, всё доступно через
manage.py.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.1/ref/settings/
"""

from pathlib import Path
import os
from dotenv import load_dotenv
load_dotenv()
# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'thetalab-local-key')

DEBUG = os.getenv('DJANGO_DEBUG', '0') == '1'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',

    # Приложения проекта
    'graphcore',
    'theta',
    'unavoidable',
    'decompose',
    'omega',
    'graphclasses',
    'bonds',
    'lab',
]


# Database
# https://docs.djangoproject.com/en/5.1/ref/settings/#databases

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization
# https://docs.djangoproject.com/en/5.1/topics/i18n/

LANGUAGE_CODE = 'ru-RU'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

# Default primary key field type
# https://docs.djangoproject.com/en/5.1/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Настройки переборных алгоритмов
# Бюджет - максимальное число узлов перебора для одной операции
THETALAB_BUDGET = int(os.getenv('THETALAB_BUDGET', 10_000_000))
# Ограничение по времени в секундах, 0 - без ограничения
THETALAB_TIME_LIMIT = float(os.getenv('THETALAB_TIME_LIMIT', 0))
# Версия схемы JSON-отчётов
THETALAB_REPORT_VERSION = 1
THETALAB_VERSION = '1.0.0'

THETALAB_LOG_LEVEL = os.getenv('THETALAB_LOG_LEVEL', 'INFO')


LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': THETALAB_LOG_LEVEL,
            'propagate': False,
        }
        for app in (
            'graphcore', 'theta', 'unavoidable', 'decompose',
            'omega', 'graphclasses', 'bonds', 'lab',
        )
    },
}
