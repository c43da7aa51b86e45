from django.apps import AppConfig


class UnavoidableConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'unavoidable'
    verbose_name = 'Неизбежные подструктуры'
