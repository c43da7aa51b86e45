from django.apps import AppConfig


class DecomposeConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'decompose'
    verbose_name = 'Разложения на суммы'
