from django.apps import AppConfig


class ThetaConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'theta'
    verbose_name = 'Поиск тета-графов'
